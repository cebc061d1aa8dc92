"""Combinatorics of colored and stranded rank-D tensor graphs.

Construction and validation of colored (edge-colored bipartite regular)
and stranded tensor graphs, face enumeration by strand tracing and by
two-color cycles, bubble enumeration with ribbon invariants (Euler
characteristic, genus, planarity), multi-orientability and colorability
decision procedures with constructive witnesses, seeded random
ensembles with deterministic censuses, and simplex counts of the dual
triangulation.
"""

__version__ = "0.1.0"

from .bubbles import (
    Bubble,
    BubbleCensus,
    BubbleRecord,
    bubble_census,
    bubble_ribbon,
    enumerate_bubbles,
)
from .checks import (
    ALTERNATING,
    BLOCK,
    ColorabilityResult,
    MoObstruction,
    MoResult,
    SignAssignment,
    SignPattern,
    colorability,
    colored_mo_witness,
    is_untwisted,
    mo_admissibility,
    stranded_same_structure,
    verify_sign_assignment,
)
from .core import (
    BLACK,
    WHITE,
    ColoredEdge,
    ColoredGraph,
    Component,
    HalfEdgeRef,
    StrandSlot,
    StrandedEdge,
    StrandedGraph,
    StrandedVertex,
    ValidationReport,
    Violation,
    build_colored,
    build_stranded,
    components,
    stranded_components,
    to_stranded,
    validate_colored,
)
from .dual import DualComplexCounts, complex_euler, dual_counts
from .formats import export_dot, parse_graph, serialize_graph
from .sampling import (
    GENERATOR_ID,
    CensusReport,
    SplitMix64,
    census,
    random_colored,
    random_connected,
    subseed,
)
from .topology import (
    FaceSet,
    RibbonCounts,
    bicolored_face_count,
    bicolored_faces,
    euler_characteristic,
    genus,
    is_planar,
    pair_cycle_count,
    ribbon_counts,
    trace_faces,
)

from . import errors  # noqa: F401  (re-exported as a namespace)
