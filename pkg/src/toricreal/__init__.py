"""toricreal: exact convex geometry for toric birational maps and their
C*-action realizations."""

from .chambers import (
    ChamberDecomposition,
    classify_wall,
    effective_cone,
    is_wall_crossing,
    modify,
    movable_cone,
    ray_classes,
    same_chamber,
    secondary_fan,
)
from .cones import Cone
from .cstar import (
    ActionReport,
    action_info,
    criticality,
    fixed_components,
    fixed_vertex_counts,
    geometric_quotients,
    pruning,
    quotient,
    render_action_report,
    render_action_report_structured,
    weights,
)
from .errors import (
    DomainError,
    EmptyPolytope,
    ExhaustedAttempts,
    InconsistentRelations,
    LowerDimensional,
    NoSolution,
    NoSuchM,
    NotBig,
    NotCartier,
    NotComplete,
    NotFano,
    NotSimplicial,
    OutOfRange,
    ParseError,
    SameChamber,
    TorsionClassGroup,
    ToricRealError,
    UnboundedPolyhedron,
)
from .fan import Fan
from .polytope import RationalPolytope
from .realize import (
    Realization,
    compute_m,
    fano_realization,
    geometric_realization,
    is_sharp,
    sharp_realization,
    unpruning,
)
from .toric import (
    TorusDivisor,
    ToricVariety,
    as_divisor,
    from_normal_fan,
    from_primitive_relations,
    proj_rays,
    projective_bundle,
)

__version__ = "0.1.0"
