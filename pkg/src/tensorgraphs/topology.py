"""Faces, Euler characteristic, genus, and planarity of ribbon structures.

Faces of a stranded graph are the closed strand circuits: orbits of the
strand slots under alternating the within-edge gluing and the
within-vertex pairing.  For colored graphs the same circuits appear as
the connected components of two-color subgraphs, which are even
alternating cycles; both routes are implemented and must agree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import ColoredEdge, ColoredGraph, StrandSlot, StrandedGraph
from .errors import BadParameters, Disconnected, NegativeGenus, OddEuler


@dataclass(frozen=True)
class FaceSet:
    """Faces as disjoint cycles covering every slot (or two-color edge).

    Stranded cycles are tuples of :class:`StrandSlot`; colored cycles are
    alternating tuples of :class:`ColoredEdge` over two colors.
    """

    faces: tuple[tuple, ...]
    count: int


@dataclass(frozen=True)
class RibbonCounts:
    """Vertex, edge, and face counts of a ribbon graph with chi = V - E + F.

    ``genus`` is present only when the counts came with connectivity
    evidence and chi is even.
    """

    v: int
    e: int
    f: int
    chi: int
    genus: int | None


def _edge_transition(s: StrandedGraph) -> dict[StrandSlot, StrandSlot]:
    """The within-edge involution on strand slots."""
    pair: dict[StrandSlot, StrandSlot] = {}
    for edge in s.edges:
        r1 = s.halfedge_refs[edge.halfedges[0]]
        r2 = s.halfedge_refs[edge.halfedges[1]]
        labels1 = [k for k in range(s.rank + 1) if k != r1.position]
        labels2 = [k for k in range(s.rank + 1) if k != r2.position]
        for k, m in enumerate(edge.permutation):
            s1 = StrandSlot(r1.vertex, r1.position, labels1[k])
            s2 = StrandSlot(r2.vertex, r2.position, labels2[m])
            pair[s1] = s2
            pair[s2] = s1
    return pair


def trace_faces(s: StrandedGraph) -> FaceSet:
    """Faces of a closed stranded graph by strand tracing.

    Each face starts at its least slot and is traversed edge transition
    first, so output is deterministic.  Every slot lies in exactly one
    face.
    """
    edge_pair = _edge_transition(s)
    seen: set[StrandSlot] = set()
    faces: list[tuple[StrandSlot, ...]] = []
    for start in sorted(s.slots()):
        if start in seen:
            continue
        cycle: list[StrandSlot] = []
        cur = start
        while True:
            cycle.append(cur)
            hop = edge_pair[cur]
            cycle.append(hop)
            cur = StrandSlot(hop.vertex, hop.slot, hop.position)
            if cur == start:
                break
        seen.update(cycle)
        faces.append(tuple(cycle))
    return FaceSet(tuple(faces), len(faces))


def _inverse(perm: tuple[int, ...]) -> list[int]:
    inv = [0] * len(perm)
    for i, j in enumerate(perm):
        inv[j] = i
    return inv


def _pair_cycles(g: ColoredGraph, a: int, b: int) -> list[tuple[ColoredEdge, ...]]:
    """Alternating cycles of the {a, b}-subgraph, a < b.

    Each cycle starts at its least white index with the color-a edge
    first and has even length.
    """
    sigma_a = g.matchings[a]
    inv_b = _inverse(g.matchings[b])
    seen = [False] * g.n
    cycles = []
    for start in range(g.n):
        if seen[start]:
            continue
        cycle: list[ColoredEdge] = []
        i = start
        while True:
            seen[i] = True
            j = sigma_a[i]
            cycle.append(ColoredEdge(a, g.whites[i], g.blacks[j]))
            i = inv_b[j]
            cycle.append(ColoredEdge(b, g.whites[i], g.blacks[j]))
            if i == start:
                break
        cycles.append(tuple(cycle))
    return cycles


def bicolored_faces(g: ColoredGraph) -> FaceSet:
    """Faces of a colored graph: two-color components over all color pairs."""
    faces: list[tuple[ColoredEdge, ...]] = []
    for a, b in itertools.combinations(g.colors, 2):
        faces.extend(_pair_cycles(g, a, b))
    return FaceSet(tuple(faces), len(faces))


def pair_cycle_count(g: ColoredGraph, a: int, b: int, whites: set[int] | None = None) -> int:
    """Number of {a, b}-cycles, optionally restricted to a white subset.

    Counts the cycles of the matching composition directly, without
    materializing the cycles.
    """
    sigma_a = g.matchings[a]
    inv_b = _inverse(g.matchings[b])
    domain = range(g.n) if whites is None else sorted(whites)
    seen: set[int] = set()
    count = 0
    for start in domain:
        if start in seen:
            continue
        count += 1
        i = start
        while i not in seen:
            seen.add(i)
            i = inv_b[sigma_a[i]]
    return count


def bicolored_face_count(g: ColoredGraph) -> int:
    """Face count without materializing cycles; agrees with bicolored_faces."""
    return sum(
        pair_cycle_count(g, a, b) for a, b in itertools.combinations(g.colors, 2)
    )


def euler_characteristic(v: int, e: int, f: int) -> int:
    """V - E + F."""
    if v < 0 or e < 0 or f < 0:
        raise BadParameters(f"counts must be non-negative, got ({v}, {e}, {f})")
    return v - e + f


def genus(v: int, e: int, f: int, *, connected: bool) -> int:
    """Genus (2 - chi) / 2 of a connected orientable ribbon graph.

    ``connected`` is explicit evidence; summing characteristics of a
    disconnected graph would silently corrupt the genus, so passing
    ``False`` raises Disconnected.  Odd chi raises OddEuler (the ribbon
    data is non-orientable or corrupted); chi > 2 raises NegativeGenus
    (a disconnected input was passed off as connected).
    """
    if not connected:
        raise Disconnected("genus requires connectivity evidence")
    chi = euler_characteristic(v, e, f)
    if chi % 2 != 0:
        raise OddEuler(f"Euler characteristic {chi} is odd for counts ({v}, {e}, {f})")
    if chi > 2:
        raise NegativeGenus(f"Euler characteristic {chi} exceeds 2 for counts ({v}, {e}, {f})")
    return (2 - chi) // 2


def is_planar(v: int, e: int, f: int, *, connected: bool) -> bool:
    """True iff the connected orientable ribbon graph has genus zero."""
    return genus(v, e, f, connected=connected) == 0


def ribbon_counts(v: int, e: int, f: int, *, connected: bool) -> RibbonCounts:
    """Bundle counts with chi, and with genus when evidence allows it."""
    chi = euler_characteristic(v, e, f)
    g = None
    if connected and chi % 2 == 0 and chi <= 2:
        g = (2 - chi) // 2
    return RibbonCounts(v, e, f, chi, g)
