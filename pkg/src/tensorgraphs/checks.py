"""Structural decision procedures for stranded graphs.

Three properties are decided, each with a constructive witness:

- twist-freedom: every edge glues its strands by the identity;
- multi-orientability: corners can be signed so every vertex reads a
  rotation of a fixed sign pattern and every edge joins + to -;
- colorability: edges can be colored so every vertex sees each color
  once in cyclically consecutive order, with a white/black bipartition.

Witnesses are lexicographically least (vertices in label order, choices
ascending), so identical inputs give identical outputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .core import BLACK, WHITE, ColoredGraph, HalfEdgeRef, StrandedGraph
from .errors import TwistedInput, WrongRank


@dataclass(frozen=True)
class SignPattern:
    """Cyclic corner sign pattern; rank-3 patterns have two + and two -."""

    name: str
    signs: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.signs) != [-1, -1, 1, 1]:
            raise ValueError("rank-3 sign patterns need exactly two + and two -")

    def rotated(self, position: int, rotation: int) -> int:
        return self.signs[(position + rotation) % len(self.signs)]

    def distinct_rotations(self) -> tuple[int, ...]:
        """Rotation offsets giving distinct sign sequences, ascending.

        The alternating pattern has period two, so only offsets 0 and 1
        are kept; the block pattern keeps all four.
        """
        seen: set[tuple[int, ...]] = set()
        keep = []
        for r in range(len(self.signs)):
            seq = tuple(self.rotated(p, r) for p in range(len(self.signs)))
            if seq not in seen:
                seen.add(seq)
                keep.append(r)
        return tuple(keep)


ALTERNATING = SignPattern("alternating", (1, -1, 1, -1))
BLOCK = SignPattern("block", (1, 1, -1, -1))

PATTERNS = {p.name: p for p in (ALTERNATING, BLOCK)}


@dataclass(frozen=True)
class SignAssignment:
    """Corner signs witnessing multi-orientability.

    At each vertex the signs along the cyclic half-edge order are the
    pattern rotated by ``rotations[vertex]``; every edge joins a + to
    a - half-edge.
    """

    signs: Mapping[HalfEdgeRef, int]
    pattern: SignPattern
    rotations: Mapping[str, int]


@dataclass(frozen=True)
class MoObstruction:
    """Evidence that no rotation works at ``vertex``: one conflicting
    edge per rotation tried (not a minimality certificate)."""

    vertex: str
    conflicts: tuple[tuple[int, tuple[str, str], str], ...]


@dataclass(frozen=True)
class MoResult:
    admissible: bool
    assignment: SignAssignment | None
    obstruction: MoObstruction | None


@dataclass(frozen=True)
class ColorabilityResult:
    colorable: bool
    witness: ColoredGraph | None
    obstruction: str | None


def is_untwisted(s: StrandedGraph) -> tuple[bool, tuple[int, ...]]:
    """True plus () iff every strand permutation is the identity;
    otherwise False plus the offending edge indices."""
    ident = tuple(range(s.rank))
    offenders = tuple(
        i for i, e in enumerate(s.edges) if e.permutation != ident
    )
    return (not offenders, offenders)


def _edge_endpoints(s: StrandedGraph) -> list[tuple[HalfEdgeRef, HalfEdgeRef]]:
    return [
        (s.halfedge_refs[e.halfedges[0]], s.halfedge_refs[e.halfedges[1]])
        for e in s.edges
    ]


def mo_admissibility(s: StrandedGraph, pattern: SignPattern = ALTERNATING) -> MoResult:
    """Search for corner signs making ``s`` multi-orientable.

    Tries, per vertex in label order, ascending rotations of the pattern
    along the cyclic half-edge order; an edge may only join a + to a -
    corner.  Returns the lexicographically least satisfying assignment,
    or the obstruction met at the deepest point of the search.

    Requires rank 3 and untwisted edges (multi-orientability is defined
    only without strand twists).
    """
    if s.rank != 3:
        raise WrongRank(f"multi-orientability is defined for rank 3, got rank {s.rank}")
    ok, offenders = is_untwisted(s)
    if not ok:
        raise TwistedInput(f"edges {list(offenders)} carry twists")

    order = sorted(v.label for v in s.vertices)
    # per vertex, the edges it touches: (position, other vertex, other position, ends)
    touching: dict[str, list[tuple[int, str, int, tuple[str, str]]]] = {
        label: [] for label in order
    }
    for e, (r1, r2) in zip(s.edges, _edge_endpoints(s)):
        touching[r1.vertex].append((r1.position, r2.vertex, r2.position, e.halfedges))
        touching[r2.vertex].append((r2.position, r1.vertex, r1.position, e.halfedges))

    rotations: dict[str, int] = {}
    candidate_rotations = pattern.distinct_rotations()
    best_depth = -1
    best_conflicts: list[tuple[int, tuple[str, str], str]] = []

    def conflict_at(label: str, rot: int) -> tuple[tuple[str, str], str] | None:
        for pos, other, opos, ends in touching[label]:
            if other == label:
                other_rot = rot
            elif other in rotations:
                other_rot = rotations[other]
            else:
                continue
            mine = pattern.rotated(pos, rot)
            theirs = pattern.rotated(opos, other_rot)
            if mine == theirs:
                sign = "+" if mine > 0 else "-"
                return ends, f"both ends signed {sign}"
        return None

    def search(depth: int) -> bool:
        nonlocal best_depth, best_conflicts
        if depth == len(order):
            return True
        label = order[depth]
        conflicts = []
        for rot in candidate_rotations:
            hit = conflict_at(label, rot)
            if hit is None:
                rotations[label] = rot
                if search(depth + 1):
                    return True
                del rotations[label]
            else:
                conflicts.append((rot, hit[0], hit[1]))
        # deepest point the search could not extend past; conflicts may be
        # partial when some rotations failed only further down
        if depth > best_depth:
            best_depth = depth
            best_conflicts = conflicts
        return False

    if not search(0):
        return MoResult(
            False, None,
            MoObstruction(order[best_depth], tuple(best_conflicts)))

    signs = {
        HalfEdgeRef(label, pos): pattern.rotated(pos, rotations[label])
        for label in order
        for pos in range(s.rank + 1)
    }
    return MoResult(True, SignAssignment(signs, pattern, dict(rotations)), None)


def verify_sign_assignment(s: StrandedGraph, assignment: SignAssignment) -> bool:
    """Re-check a sign assignment against its own invariants."""
    for v in s.vertices:
        rot = assignment.rotations.get(v.label)
        if rot is None:
            return False
        for pos in range(s.rank + 1):
            ref = HalfEdgeRef(v.label, pos)
            if assignment.signs.get(ref) != assignment.pattern.rotated(pos, rot):
                return False
    for r1, r2 in _edge_endpoints(s):
        if assignment.signs[r1] + assignment.signs[r2] != 0:
            return False
    return True


def colored_mo_witness(g: ColoredGraph) -> SignAssignment:
    """Constructive multi-orientability witness for a colored rank-3 graph.

    At white vertices the color-c half-edge is + iff c is even; at black
    vertices the opposite.  Every edge then joins opposite signs, and
    each vertex reads the alternating pattern rotated by 0 (white) or 1
    (black).
    """
    if g.rank != 3:
        raise WrongRank(f"multi-orientability is defined for rank 3, got rank {g.rank}")
    signs: dict[HalfEdgeRef, int] = {}
    rotations: dict[str, int] = {}
    for label, parity in g.nodes():
        white = parity == WHITE
        rotations[label] = 0 if white else 1
        for c in g.colors:
            plus = (c % 2 == 0) if white else (c % 2 == 1)
            signs[HalfEdgeRef(label, c)] = 1 if plus else -1
    return SignAssignment(signs, ALTERNATING, rotations)


def _vertex_configs(rank: int) -> list[tuple[int, int]]:
    # (orientation, offset): color at position p is (offset + orientation*p) mod (rank+1)
    return [(1, r) for r in range(rank + 1)] + [(-1, r) for r in range(rank + 1)]


def colorability(s: StrandedGraph) -> ColorabilityResult:
    """Decide whether ``s`` is the stranded form of some colored graph.

    Backtracking search (vertices in label order, configurations
    ascending) for an edge coloring in which every vertex sees all
    colors in cyclically consecutive order, read forward or backward
    (the stored cyclic list carries no global drawing direction), and
    every edge glues same-colored strands together.  A white/black
    bipartition must then exist with every edge joining white to black;
    the least vertex label of each component is taken white.

    The returned witness validates, and its stranded expansion has the
    same (vertex, position) edge structure as the input.
    """
    m = s.rank + 1
    order = sorted(v.label for v in s.vertices)

    # self-loops can never join a positive to a negative vertex
    endpoints = _edge_endpoints(s)
    for r1, r2 in endpoints:
        if r1.vertex == r2.vertex:
            return ColorabilityResult(
                False, None,
                f"edge joins two half-edges of vertex {r1.vertex!r}; "
                "an edge must join a white to a black vertex")

    slot_labels = [
        [k for k in range(m) if k != pos] for pos in range(m)
    ]
    # per vertex: (my position, my slots, other vertex, other position,
    # other slots permuted to align with mine)
    constraints: dict[str, list[tuple[int, list[int], str, int, list[int]]]] = {
        label: [] for label in order
    }
    for e, (r1, r2) in zip(s.edges, endpoints):
        a = slot_labels[r1.position]
        b = slot_labels[r2.position]
        b_for_a = [b[e.permutation[k]] for k in range(s.rank)]
        a_for_b = [0] * s.rank
        for k in range(s.rank):
            a_for_b[e.permutation[k]] = a[k]
        constraints[r1.vertex].append((r1.position, a, r2.vertex, r2.position, b_for_a))
        constraints[r2.vertex].append((r2.position, b, r1.vertex, r1.position, a_for_b))

    configs = _vertex_configs(s.rank)
    chosen: dict[str, tuple[int, int]] = {}

    def color_at(config: tuple[int, int], pos: int) -> int:
        orient, offset = config
        return (offset + orient * pos) % m

    def consistent(label: str, config: tuple[int, int]) -> bool:
        for pos, mine, other, opos, theirs in constraints[label]:
            if other not in chosen:
                continue
            oconf = chosen[other]
            if color_at(config, pos) != color_at(oconf, opos):
                return False
            for k in range(s.rank):
                if color_at(config, mine[k]) != color_at(oconf, theirs[k]):
                    return False
        return True

    def search(depth: int) -> bool:
        if depth == len(order):
            return True
        label = order[depth]
        for config in configs:
            if consistent(label, config):
                chosen[label] = config
                if search(depth + 1):
                    return True
                del chosen[label]
        return False

    if not search(0):
        return ColorabilityResult(
            False, None,
            "no edge coloring reads cyclically consecutive colors at every vertex")

    # bipartition: least label of each component becomes white
    adjacency: dict[str, list[str]] = {label: [] for label in order}
    for r1, r2 in endpoints:
        adjacency[r1.vertex].append(r2.vertex)
        adjacency[r2.vertex].append(r1.vertex)
    parity: dict[str, str] = {}
    for root in order:
        if root in parity:
            continue
        parity[root] = WHITE
        queue = [root]
        while queue:
            cur = queue.pop()
            for nxt in adjacency[cur]:
                want = BLACK if parity[cur] == WHITE else WHITE
                if nxt not in parity:
                    parity[nxt] = want
                    queue.append(nxt)
                elif parity[nxt] != want:
                    return ColorabilityResult(
                        False, None,
                        f"odd cycle through {cur!r} and {nxt!r}: no "
                        "white/black bipartition exists")

    whites = tuple(label for label in order if parity[label] == WHITE)
    blacks = tuple(label for label in order if parity[label] == BLACK)
    widx = {label: i for i, label in enumerate(whites)}
    bidx = {label: i for i, label in enumerate(blacks)}
    rows: list[list[int]] = [[-1] * len(whites) for _ in range(m)]
    for r1, r2 in endpoints:
        color = color_at(chosen[r1.vertex], r1.position)
        w, b = (r1.vertex, r2.vertex) if parity[r1.vertex] == WHITE else (r2.vertex, r1.vertex)
        rows[color][widx[w]] = bidx[b]
    witness = ColoredGraph(s.rank, whites, blacks, tuple(tuple(row) for row in rows))
    return ColorabilityResult(True, witness, None)


def stranded_same_structure(s1: StrandedGraph, s2: StrandedGraph) -> bool:
    """Equality of stranded structure preserving (vertex, position) pairs,
    ignoring half-edge labels and edge listing order."""
    if s1.rank != s2.rank:
        return False
    if {v.label for v in s1.vertices} != {v.label for v in s2.vertices}:
        return False

    def normalized(s: StrandedGraph) -> list:
        out = []
        for e, (r1, r2) in zip(s.edges, _edge_endpoints(s)):
            if r2 < r1:
                inv = [0] * s.rank
                for k, mk in enumerate(e.permutation):
                    inv[mk] = k
                out.append((r2, r1, tuple(inv)))
            else:
                out.append((r1, r2, e.permutation))
        return sorted(out)

    return normalized(s1) == normalized(s2)


__all__ = [
    "ALTERNATING",
    "BLOCK",
    "PATTERNS",
    "ColorabilityResult",
    "MoObstruction",
    "MoResult",
    "SignAssignment",
    "SignPattern",
    "colorability",
    "colored_mo_witness",
    "is_untwisted",
    "mo_admissibility",
    "stranded_same_structure",
    "verify_sign_assignment",
]
