"""Colored and stranded tensor graph data model.

A colored graph of rank D is a bipartite (D+1)-regular multigraph whose
edges carry colors 0..D, every vertex meeting each color exactly once.
It is stored as one perfect matching per color between the white and the
black vertex class: ``matchings[c][i] == j`` says the color-c edge at
white ``whites[i]`` ends at black ``blacks[j]``.

A stranded graph makes the strand structure explicit.  Every vertex has
D+1 half-edges in cyclic order; every half-edge carries D strand slots,
one per sibling position, and the slot labeled j of the half-edge at
position i is paired inside the vertex with the slot labeled i of the
half-edge at position j (the complete pairing dual to a D-simplex).
Every edge records how the slots of its two ends are glued, as a
permutation written against both ends' ascending slot labels; the
identity permutation means the strands run parallel (no twist).

Graphs are immutable once built; every operation here is a pure read,
so values can be shared freely between concurrent tasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple, Sequence

from ._unionfind import UnionFind
from .errors import (
    BadParameters,
    BadPermutation,
    ColorOutOfRange,
    DanglingHalfEdge,
    DuplicateColorAtVertex,
    HalfEdgeReused,
    MissingColorAtVertex,
    UnequalParts,
    UnknownNode,
    WrongValence,
)

WHITE = "white"
BLACK = "black"


class ColoredEdge(NamedTuple):
    color: int
    white: str
    black: str


class HalfEdgeRef(NamedTuple):
    """A half-edge, addressed by its vertex and cyclic position."""

    vertex: str
    position: int


class StrandSlot(NamedTuple):
    """One strand slot: slot ``slot`` of the half-edge at ``position``."""

    vertex: str
    position: int
    slot: int


@dataclass(frozen=True)
class Violation:
    rule: str
    element: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violations: tuple[Violation, ...]


@dataclass(frozen=True)
class Component:
    vertices: tuple[str, ...]
    edges: tuple[ColoredEdge, ...]


@dataclass(frozen=True)
class ColoredGraph:
    """Bipartite rank-D tensor graph, one perfect matching per color."""

    rank: int
    whites: tuple[str, ...]
    blacks: tuple[str, ...]
    matchings: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        """Number of white (equally, black) vertices."""
        return len(self.whites)

    @property
    def colors(self) -> range:
        return range(self.rank + 1)

    @cached_property
    def white_index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.whites)}

    @cached_property
    def black_index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.blacks)}

    def parity(self, label: str) -> str:
        if label in self.white_index:
            return WHITE
        if label in self.black_index:
            return BLACK
        raise UnknownNode(f"vertex {label!r} is not in this graph")

    def nodes(self) -> Iterator[tuple[str, str]]:
        """All vertices as (label, parity), whites first."""
        for label in self.whites:
            yield label, WHITE
        for label in self.blacks:
            yield label, BLACK

    def edges(self) -> Iterator[ColoredEdge]:
        """All edges, colors ascending, then white index."""
        for c in self.colors:
            sigma = self.matchings[c]
            for i in range(self.n):
                yield ColoredEdge(c, self.whites[i], self.blacks[sigma[i]])


@dataclass(frozen=True)
class StrandedVertex:
    label: str
    halfedges: tuple[str, ...]


@dataclass(frozen=True)
class StrandedEdge:
    halfedges: tuple[str, str]
    permutation: tuple[int, ...]


@dataclass(frozen=True)
class StrandedGraph:
    """Closed stranded graph: vertices with cyclic half-edges, glued edges."""

    rank: int
    vertices: tuple[StrandedVertex, ...]
    edges: tuple[StrandedEdge, ...]

    @cached_property
    def halfedge_refs(self) -> dict[str, HalfEdgeRef]:
        refs: dict[str, HalfEdgeRef] = {}
        for v in self.vertices:
            for pos, h in enumerate(v.halfedges):
                refs[h] = HalfEdgeRef(v.label, pos)
        return refs

    @cached_property
    def vertex_by_label(self) -> dict[str, StrandedVertex]:
        return {v.label: v for v in self.vertices}

    def halfedge_label(self, ref: HalfEdgeRef) -> str:
        return self.vertex_by_label[ref.vertex].halfedges[ref.position]

    def slots(self) -> Iterator[StrandSlot]:
        """Every strand slot of the graph, (D+1)*D per vertex."""
        for v in self.vertices:
            for pos in range(self.rank + 1):
                for slot in range(self.rank + 1):
                    if slot != pos:
                        yield StrandSlot(v.label, pos, slot)


IDENTITY_CACHE: dict[int, tuple[int, ...]] = {}


def identity_permutation(rank: int) -> tuple[int, ...]:
    perm = IDENTITY_CACHE.get(rank)
    if perm is None:
        perm = IDENTITY_CACHE[rank] = tuple(range(rank))
    return perm


def build_colored(
    rank: int,
    whites: Sequence[str],
    blacks: Sequence[str],
    edges: Sequence[tuple[int, str, str]],
) -> ColoredGraph:
    """Build a colored graph from an explicit edge list.

    Edges are (color, white label, black label) triples; they are
    reorganized into one matching per color.  Raises on the first
    offending element:

    - UnequalParts if the vertex classes differ in size
    - UnknownNode / ColorOutOfRange for an edge referencing undeclared
      vertices or colors
    - DuplicateColorAtVertex / MissingColorAtVertex if some vertex does
      not see every color exactly once
    """
    if rank < 2:
        raise BadParameters(f"rank must be >= 2, got {rank}")
    whites = tuple(whites)
    blacks = tuple(blacks)
    if len(whites) != len(blacks):
        raise UnequalParts(f"{len(whites)} white vertices vs {len(blacks)} black")
    seen: set[str] = set()
    for label in whites + blacks:
        if label in seen:
            raise BadParameters(f"vertex label {label!r} declared twice")
        seen.add(label)
    n = len(whites)
    widx = {label: i for i, label in enumerate(whites)}
    bidx = {label: i for i, label in enumerate(blacks)}

    rows: list[list[int | None]] = [[None] * n for _ in range(rank + 1)]
    black_seen: list[set[int]] = [set() for _ in range(rank + 1)]
    for color, white, black in edges:
        if not 0 <= color <= rank:
            raise ColorOutOfRange(f"color {color} outside 0..{rank} on edge ({white!r}, {black!r})")
        if white not in widx:
            raise UnknownNode(f"edge of color {color} references unknown white {white!r}")
        if black not in bidx:
            raise UnknownNode(f"edge of color {color} references unknown black {black!r}")
        i, j = widx[white], bidx[black]
        if rows[color][i] is not None:
            raise DuplicateColorAtVertex(f"color {color} repeated at white {white!r}")
        if j in black_seen[color]:
            raise DuplicateColorAtVertex(f"color {color} repeated at black {black!r}")
        rows[color][i] = j
        black_seen[color].add(j)
    for color in range(rank + 1):
        for i in range(n):
            if rows[color][i] is None:
                raise MissingColorAtVertex(f"white {whites[i]!r} has no edge of color {color}")
    matchings = tuple(tuple(row) for row in rows)  # type: ignore[arg-type]
    return ColoredGraph(rank, whites, blacks, matchings)


def validate_colored(g: ColoredGraph) -> ValidationReport:
    """Check every colored-graph invariant, reporting all violations.

    Violations are data, not exceptions, so graphs assembled without the
    builder can be inspected.  White/black endpoint parity holds by
    encoding (matchings go from whites to blacks) and cannot be violated.
    """
    violations: list[Violation] = []
    if g.rank < 2:
        violations.append(Violation("BadRank", str(g.rank), f"rank must be >= 2, got {g.rank}"))
    if len(g.whites) != len(g.blacks):
        violations.append(Violation(
            "UnequalParts", "graph",
            f"{len(g.whites)} white vertices vs {len(g.blacks)} black"))
    seen: dict[str, str] = {}
    for label in g.whites + g.blacks:
        if label in seen:
            violations.append(Violation("DuplicateLabel", label, f"label {label!r} used twice"))
        seen[label] = label
    n = len(g.whites)
    if len(g.matchings) != g.rank + 1:
        violations.append(Violation(
            "MissingColorAtVertex", "graph",
            f"expected {g.rank + 1} matchings, got {len(g.matchings)}"))
    for c, sigma in enumerate(g.matchings):
        if len(sigma) != n:
            violations.append(Violation(
                "MissingColorAtVertex", f"color {c}",
                f"matching for color {c} covers {len(sigma)} whites, expected {n}"))
            continue
        hit: dict[int, int] = {}
        for i, j in enumerate(sigma):
            if not 0 <= j < n:
                violations.append(Violation(
                    "UnknownNode", f"color {c}, white {g.whites[i]!r}",
                    f"matching target {j} out of range"))
            elif j in hit:
                violations.append(Violation(
                    "DuplicateColorAtVertex", g.blacks[j],
                    f"color {c} repeated at black {g.blacks[j]!r}"))
            else:
                hit[j] = i
        if len(hit) < n:
            for j in range(n):
                if j not in hit:
                    violations.append(Violation(
                        "MissingColorAtVertex", g.blacks[j],
                        f"black {g.blacks[j]!r} has no edge of color {c}"))
    return ValidationReport(not violations, tuple(violations))


def _canonical_order(g: ColoredGraph) -> dict[str, int]:
    # whites first, then blacks, in declaration order
    order = {label: i for i, label in enumerate(g.whites)}
    order.update({label: g.n + j for j, label in enumerate(g.blacks)})
    return order


def components(g: ColoredGraph, colors: set[int] | frozenset[int]) -> list[Component]:
    """Connected components of the subgraph keeping only the given colors.

    All vertices are kept; vertices incident to no retained edge form
    singleton components.  Components are ordered by their least vertex
    (whites before blacks, declaration order).
    """
    for c in colors:
        if not 0 <= c <= g.rank:
            raise ColorOutOfRange(f"color {c} outside 0..{g.rank}")
    n = g.n
    uf = UnionFind(2 * n)
    for c in sorted(colors):
        sigma = g.matchings[c]
        for i in range(n):
            uf.union(i, n + sigma[i])
    groups = uf.groups()
    labels = list(g.whites) + list(g.blacks)
    comps = []
    for members in groups:
        member_set = set(members)
        edges = tuple(
            ColoredEdge(c, g.whites[i], g.blacks[g.matchings[c][i]])
            for c in sorted(colors)
            for i in range(n)
            if i in member_set
        )
        comps.append(Component(tuple(labels[m] for m in members), edges))
    return comps


def to_stranded(g: ColoredGraph) -> StrandedGraph:
    """Expand a colored graph into its stranded form.

    Every vertex lists its half-edges in color order 0..D, so position
    equals color; white vertices read the list anti-clockwise and black
    vertices clockwise, which is why the stored data looks the same for
    both.  Half-edge labels are ``<vertex>:<color>``.  All strand
    permutations are the identity: colored graphs carry no twists.
    """
    report = validate_colored(g)
    if not report.valid:
        raise BadParameters(
            f"graph fails validation: {report.violations[0].message}")
    vertices = tuple(
        StrandedVertex(label, tuple(f"{label}:{c}" for c in g.colors))
        for label, _parity in g.nodes()
    )
    ident = identity_permutation(g.rank)
    edges = tuple(
        StrandedEdge((f"{e.white}:{e.color}", f"{e.black}:{e.color}"), ident)
        for e in g.edges()
    )
    return StrandedGraph(g.rank, vertices, edges)


def build_stranded(
    rank: int,
    vertices: Sequence[tuple[str, Sequence[str]]],
    edges: Sequence[tuple[tuple[str, str], Sequence[int] | None]],
) -> StrandedGraph:
    """Build a closed stranded graph, checking closure and valence.

    ``vertices`` lists (label, cyclic half-edge labels); ``edges`` lists
    ((half-edge, half-edge), strand permutation), where ``None`` stands
    for the identity permutation.  Open legs are rejected: every
    half-edge must occur in exactly one edge end.
    """
    if rank < 2:
        raise BadParameters(f"rank must be >= 2, got {rank}")
    vlabels: set[str] = set()
    declared: set[str] = set()
    built_vertices = []
    for label, halfedges in vertices:
        if label in vlabels:
            raise BadParameters(f"vertex label {label!r} declared twice")
        vlabels.add(label)
        halfedges = tuple(halfedges)
        if len(halfedges) != rank + 1:
            raise WrongValence(
                f"vertex {label!r} has {len(halfedges)} half-edges, expected {rank + 1}")
        for h in halfedges:
            if h in declared:
                raise BadParameters(f"half-edge label {h!r} declared twice")
            declared.add(h)
        built_vertices.append(StrandedVertex(label, halfedges))

    used: set[str] = set()
    built_edges = []
    ident = identity_permutation(rank)
    for ends, perm in edges:
        h1, h2 = ends
        for h in (h1, h2):
            if h not in declared:
                raise BadParameters(f"edge references undeclared half-edge {h!r}")
        if h1 == h2:
            raise HalfEdgeReused(f"half-edge {h1!r} used for both ends of one edge")
        for h in (h1, h2):
            if h in used:
                raise HalfEdgeReused(f"half-edge {h!r} appears in more than one edge")
            used.add(h)
        if perm is None:
            permutation = ident
        else:
            permutation = tuple(perm)
            if sorted(permutation) != list(range(rank)):
                raise BadPermutation(
                    f"edge ({h1!r}, {h2!r}): {list(permutation)} is not a "
                    f"permutation of 0..{rank - 1}")
        built_edges.append(StrandedEdge((h1, h2), permutation))

    dangling = declared - used
    if dangling:
        names = ", ".join(repr(h) for h in sorted(dangling))
        raise DanglingHalfEdge(f"half-edges in no edge (open legs): {names}")
    return StrandedGraph(rank, tuple(built_vertices), tuple(built_edges))


def stranded_components(s: StrandedGraph) -> list[tuple[str, ...]]:
    """Vertex sets of the connected components of a stranded graph."""
    index = {v.label: i for i, v in enumerate(s.vertices)}
    uf = UnionFind(len(s.vertices))
    for e in s.edges:
        r1 = s.halfedge_refs[e.halfedges[0]]
        r2 = s.halfedge_refs[e.halfedges[1]]
        uf.union(index[r1.vertex], index[r2.vertex])
    return [
        tuple(s.vertices[i].label for i in group)
        for group in uf.groups()
    ]
