"""Bubble enumeration and the per-graph bubble census.

A bubble is a connected component of the subgraph spanned by a subset of
colors, cardinal three by default.  Presented as a ribbon graph (with
faces the two-color cycles inside the bubble) it has an Euler
characteristic and hence a genus.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core import ColoredEdge, ColoredGraph, components
from .errors import BadCardinal, InvariantViolation
from .topology import RibbonCounts, pair_cycle_count


@dataclass(frozen=True)
class Bubble:
    """One connected component of a color-subset subgraph.

    Holds references into the parent graph; use :meth:`detach` for a
    plain serializable record.
    """

    colors: tuple[int, ...]
    vertices: tuple[str, ...]
    edges: tuple[ColoredEdge, ...]
    parent: ColoredGraph = field(repr=False, compare=False)

    def detach(self) -> dict:
        """Plain data view, independent of the parent graph."""
        return {
            "colors": list(self.colors),
            "vertices": list(self.vertices),
            "edges": [[e.color, e.white, e.black] for e in self.edges],
        }


@dataclass(frozen=True)
class BubbleRecord:
    bubble: Bubble
    v: int
    e: int
    f: int
    chi: int
    genus: int
    planar: bool


@dataclass(frozen=True)
class BubbleCensus:
    records: tuple[BubbleRecord, ...]
    total: int
    planar_count: int
    genus_histogram: dict[int, int]


def enumerate_bubbles(g: ColoredGraph, k: int = 3) -> list[Bubble]:
    """All bubbles over every cardinal-k color subset.

    Subsets are visited in lexicographic color order; within a subset,
    components are ordered by least vertex label.  Every vertex of a
    valid graph lies in exactly one bubble per subset.
    """
    if not 1 <= k <= g.rank + 1:
        raise BadCardinal(f"cardinal {k} outside 1..{g.rank + 1}")
    bubbles = []
    for subset in itertools.combinations(g.colors, k):
        comps = components(g, set(subset))
        comps.sort(key=lambda comp: min(comp.vertices))
        for comp in comps:
            if len(comp.vertices) == 1:
                # cannot happen for k >= 1 on a valid graph: every vertex
                # carries every color
                raise InvariantViolation(
                    f"isolated vertex {comp.vertices[0]!r} under colors {subset}")
            bubbles.append(Bubble(subset, comp.vertices, comp.edges, g))
    return bubbles


def bubble_ribbon(b: Bubble) -> RibbonCounts:
    """Ribbon invariants of one bubble.

    F counts the two-color cycles over the bubble's own color pairs,
    restricted to the bubble.  Bubbles of valid colored graphs are
    connected and orientable, so chi is even and genus non-negative;
    anything else is an internal fault.
    """
    if len(b.colors) != 3:
        raise BadCardinal(
            f"ribbon invariants are defined for three-color bubbles, "
            f"got colors {b.colors}")
    g = b.parent
    whites = {g.white_index[label] for label in b.vertices if label in g.white_index}
    v = len(b.vertices)
    e = len(b.edges)
    f = sum(
        pair_cycle_count(g, a, c, whites)
        for a, c in itertools.combinations(b.colors, 2)
    )
    chi = v - e + f
    if chi % 2 != 0 or chi > 2:
        raise InvariantViolation(
            f"bubble over colors {b.colors} has impossible counts "
            f"(V={v}, E={e}, F={f})")
    return RibbonCounts(v, e, f, chi, (2 - chi) // 2)


def bubble_census(g: ColoredGraph) -> BubbleCensus:
    """One record per cardinal-3 bubble plus aggregates.

    Record order is deterministic (subsets lexicographic, components by
    least vertex label), so two runs over the same graph are identical.
    """
    records = []
    histogram: dict[int, int] = {}
    for b in enumerate_bubbles(g, 3):
        counts = bubble_ribbon(b)
        assert counts.genus is not None
        records.append(BubbleRecord(
            b, counts.v, counts.e, counts.f, counts.chi,
            counts.genus, counts.genus == 0))
        histogram[counts.genus] = histogram.get(counts.genus, 0) + 1
    planar = sum(1 for r in records if r.planar)
    histogram = {genus: histogram[genus] for genus in sorted(histogram)}
    return BubbleCensus(tuple(records), len(records), planar, histogram)
