"""Acceptance suite.

One test per criterion; each prints a single pass/fail line (visible
with ``pytest -s`` or ``-rA``).  Tolerances are exact unless a criterion
states a band; the stated runtime budgets are asserted too.
"""

import functools
import itertools
import json
import time
from fractions import Fraction

import pytest

from tensorgraphs import (
    ALTERNATING,
    bicolored_faces,
    bubble_census,
    bubble_ribbon,
    colorability,
    colored_mo_witness,
    complex_euler,
    dual_counts,
    enumerate_bubbles,
    euler_characteristic,
    genus,
    is_planar,
    mo_admissibility,
    random_colored,
    subseed,
    to_stranded,
    trace_faces,
    validate_colored,
    verify_sign_assignment,
)
from tensorgraphs.cli import run

from .conftest import make_genus_one, make_quad
from .test_topology import composition_cycle_oracle

ENSEMBLE_SEED = 20240
ENSEMBLE_SIZE = 1000


def criterion(num, description):
    def wrap(fn):
        @functools.wraps(fn)
        def inner(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"criterion {num:2d} FAIL  {description}")
                raise
            print(f"criterion {num:2d} PASS  {description}")
        return inner
    return wrap


@pytest.fixture(scope="module")
def ensemble():
    return [
        random_colored(3, (i % 8) + 1, subseed(ENSEMBLE_SEED, i))
        for i in range(ENSEMBLE_SIZE)
    ]


@criterion(1, "torus ribbon anchor: counts (2,3,1) give genus 1, non-planar")
def test_criterion_1():
    assert genus(2, 3, 1, connected=True) == 1
    assert is_planar(2, 3, 1, connected=True) is False
    assert euler_characteristic(2, 3, 1) == 0


@criterion(2, "sphere ribbon anchor: genus-0 with V=2, E=3 forces F=3")
def test_criterion_2():
    # chi = 2 - 2*0 = 2, so F = chi - V + E = 3
    assert euler_characteristic(2, 3, 3) == 2
    assert genus(2, 3, 3, connected=True) == 0
    assert is_planar(2, 3, 3, connected=True) is True


@criterion(3, "dipole suite: faces, bubbles, dual, witnesses, all exact")
def test_criterion_3(dipole):
    started = time.monotonic()
    assert bicolored_faces(dipole).count == 6
    assert trace_faces(to_stranded(dipole)).count == 6
    records = bubble_census(dipole).records
    assert len(records) == 4
    assert all((r.v, r.e, r.f, r.genus) == (2, 3, 3, 0) for r in records)
    counts = dual_counts(dipole)
    assert (counts.tetrahedra, counts.triangles, counts.segments, counts.points) \
        == (2, 4, 6, 4)
    assert complex_euler(counts) == 0
    assert verify_sign_assignment(to_stranded(dipole), colored_mo_witness(dipole))
    assert colorability(to_stranded(dipole)).colorable
    assert time.monotonic() - started < 1.0


@criterion(4, "quad suite: 8 faces, 4 planar bubbles (4,6,4), dual (4,8,8,4)")
def test_criterion_4():
    quad = make_quad()
    assert bicolored_faces(quad).count == 8
    records = bubble_census(quad).records
    assert len(records) == 4
    assert all((r.v, r.e, r.f, r.genus) == (4, 6, 4, 0) for r in records)
    counts = dual_counts(quad)
    assert (counts.tetrahedra, counts.triangles, counts.segments, counts.points) \
        == (4, 8, 8, 4)
    assert complex_euler(counts) == 0


@criterion(5, "non-planar bubble: three 3-cycles give (6,9,3), genus 1")
def test_criterion_5():
    g = make_genus_one()
    bubble = [b for b in enumerate_bubbles(g, 3) if b.colors == (1, 2, 3)][0]
    rc = bubble_ribbon(bubble)
    assert (rc.v, rc.e, rc.f) == (6, 9, 3)
    assert rc.genus == 1
    # independent oracle: cycle counting of composed matchings
    oracle_f = sum(
        composition_cycle_oracle(g, a, b)
        for a, b in itertools.combinations((1, 2, 3), 2))
    assert oracle_f == rc.f == 3


@criterion(6, "1000-graph cross-validation of strand tracing vs two-color cycles")
def test_criterion_6(ensemble):
    started = time.monotonic()
    for g in ensemble:
        stranded = trace_faces(to_stranded(g))
        colored = bicolored_faces(g)
        assert stranded.count == colored.count
        stranded_lengths: dict[frozenset, list[int]] = {}
        for cycle in stranded.faces:
            pairs = {frozenset((s.position, s.slot)) for s in cycle}
            assert len(pairs) == 1
            stranded_lengths.setdefault(next(iter(pairs)), []).append(len(cycle) // 2)
        colored_lengths: dict[frozenset, list[int]] = {}
        for cycle in colored.faces:
            pair = frozenset(e.color for e in cycle)
            colored_lengths.setdefault(pair, []).append(len(cycle))
        assert {k: sorted(v) for k, v in stranded_lengths.items()} == \
               {k: sorted(v) for k, v in colored_lengths.items()}
    assert time.monotonic() - started < 30.0


@criterion(7, "1000-graph invariant suite: validity, bubbles, witnesses, duals")
def test_criterion_7(ensemble):
    for g in ensemble:
        assert validate_colored(g).valid
        for b in enumerate_bubbles(g, 3):
            rc = bubble_ribbon(b)
            assert rc.chi % 2 == 0
            assert rc.genus is not None and rc.genus >= 0
        assert verify_sign_assignment(to_stranded(g), colored_mo_witness(g))
        counts = dual_counts(g)
        assert counts.tetrahedra == 2 * g.n
        assert counts.triangles == 4 * g.n


@criterion(8, "inclusion and separation of the corner-sign class")
def test_criterion_8(ensemble, tadpole_a, tadpole_b):
    for g in ensemble:
        assert mo_admissibility(to_stranded(g), ALTERNATING).admissible
    assert mo_admissibility(tadpole_a, ALTERNATING).admissible
    assert not colorability(tadpole_a).colorable
    assert not mo_admissibility(tadpole_b, ALTERNATING).admissible


@criterion(9, "census reproducibility across parallelism and runs")
def test_criterion_9():
    started = time.monotonic()
    base = ["census", "--rank", "3", "--size", "3", "--samples", "1000",
            "--seed", "9", "--json"]
    first = run(base + ["--jobs", "1"])
    second = run(base + ["--jobs", "8"])
    third = run(base + ["--jobs", "1"])
    assert first.exit_code == 0
    assert first.report == second.report == third.report

    small = json.loads(run(["census", "--rank", "3", "--size", "1", "--samples",
                            "100", "--seed", "5", "--json"]).report)
    assert Fraction(small["mean_faces"]) == 6
    assert small["bubble_count_distribution"] == {"4": 100}
    assert time.monotonic() - started < 60.0


@criterion(10, "uniformity smoke test: each matching is the swap half the time")
def test_criterion_10():
    samples = 2000
    swaps = [0, 0, 0, 0]
    for j in range(samples):
        g = random_colored(3, 2, subseed(1717, j))
        for c in range(4):
            swaps[c] += g.matchings[c] == (1, 0)
    for c in range(4):
        frequency = swaps[c] / samples
        assert abs(frequency - 0.5) <= 0.05, f"color {c}: {frequency}"
