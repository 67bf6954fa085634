"""Exact and numerical verification toolkit for double-sided 2-torus
actions on SU(3): cone-condition checks, isotropy classification,
pointwise transverse-Kahler certificates and cohomology tables."""

from .conegeom import (
    ConeMembership,
    MembershipStatus,
    Vec2,
    find_apex_functional,
    in_cone2,
    in_cone_many,
    is_unimodular_pair,
    smith_invariant_factors,
)
from .weights import (
    ConditionReport,
    DerivedConeData,
    InterpolationSpec,
    WeightSolution,
    WeightSystem,
    check_interpolation_path,
    check_level_set_conditions,
    check_cone_condition,
    cone_data,
    derive,
    enumerate_admissible_systems,
    interpolation_spec,
    cone_condition_holds,
    weights_from_cone_data,
)
from .isotropy import (
    Classification,
    FreenessVerdict,
    IsotropyGroup,
    SupportPattern,
    classify_quotient,
    freeness_check,
    isotropy_at_support,
    singular_stratum_census,
)
from .quadric import (
    ROUND_DATA,
    LevelSetPoint,
    PointCertificate,
    Tolerances,
    action_orbit_map,
    certification_sample,
    certify_point,
    embed_su3,
    equivariance_check,
    moment_map,
    project_to_level,
    random_su3,
    sample_level_point,
    transverse_frame,
)
from .cohomology import (
    BASIC_BETTI,
    DEGENERATE_BETA,
    GENERIC_BETA,
    SU3_DERHAM_BETTI,
    Eisenstein,
    HodgeTable,
    basic_model,
    build_derham_model,
    dga_cohomology,
    hodge_model,
)

__version__ = "0.1.0"
