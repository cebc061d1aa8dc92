"""Simplex counts of the triangulation dual to a rank-3 colored graph.

Each graph vertex is dual to a tetrahedron, each edge to a shared
triangle, each two-color face to a segment, and each three-color bubble
to a point.  Only the f-vector is produced, not the gluing itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bubbles import enumerate_bubbles
from .core import ColoredGraph
from .errors import WrongRank
from .topology import bicolored_face_count


@dataclass(frozen=True)
class DualComplexCounts:
    tetrahedra: int
    triangles: int
    segments: int
    points: int


def dual_counts(g: ColoredGraph) -> DualComplexCounts:
    """f-vector of the dual complex; rank 3 only.

    tetrahedra = 2n and triangles = 4n always; segments and points come
    from the face and bubble enumerations.
    """
    if g.rank != 3:
        raise WrongRank(f"dual tetrahedral counts are defined for rank 3, got {g.rank}")
    return DualComplexCounts(
        tetrahedra=2 * g.n,
        triangles=4 * g.n,
        segments=bicolored_face_count(g),
        points=len(enumerate_bubbles(g, 3)),
    )


def complex_euler(c: DualComplexCounts) -> int:
    """Alternating sum points - segments + triangles - tetrahedra."""
    return c.points - c.segments + c.triangles - c.tetrahedra
