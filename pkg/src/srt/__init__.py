"""
Exact p-adic analysis of cyclic covers: valuations, local field arithmetic,
truncated series of the cover function, torsor splitting criteria, reduction
trees, higher ramification, SL2 group checks, and the end-to-end wild
monodromy verification.
"""
from .valuation import (
    INFINITY,
    ExtendedRational,
    ceil_fraction,
    floor_fraction,
    fractional_part,
    multinomial,
    unit_part,
    vp,
)
from .localfield import (
    ContextError,
    DivergentSeries,
    LocalFieldContext,
    LocalFieldElement,
    NoNthRoot,
    NoSquareRoot,
    PrecisionError,
    PthPowerVerdict,
    hensel_sqrt,
    is_pth_power,
    nth_root,
    pnth_root_binomial,
    sqrt_of_minus_one,
    unit_nth_root,
)
from .series import (
    CoverParams,
    DegenerateCover,
    GaussRational,
    I_GAUSS,
    TruncatedSeries,
    TruncationUnderflow,
    coefficient_valuations,
    element_valuation,
    general_binomial,
    maclaurin_g,
    rescale,
    scaled_coefficient_valuations,
    taylor_at,
    taylor_factors,
)
from .torsor import (
    A_ONE,
    A_ZERO,
    CaseMismatch,
    GENERIC,
    InadmissibleValuation,
    InsufficientData,
    PreconditionViolated,
    SplitVerdict,
    TailDescriptor,
    TailRadius,
    center_from_constraint,
    insep_tail_catalog,
    new_insep_radius_bounds,
    splitting_obstruction,
    tail_center,
    tail_radius,
)
from .graph import (
    CycleCheck,
    DeformationProfile,
    Edge,
    InvalidProfile,
    InvalidTree,
    MissingLabel,
    MonotonicityVerdict,
    ReductionTree,
    SolveResult,
    TailConfig,
    Vertex,
    check_monotonic,
    check_vanishing_cycles,
    effective_different,
    effective_invariant,
    effective_invariant_from_tails,
    enumerate_tail_configs,
    invariant_weights,
    propagate_differents,
    validate_tree,
)
from .ramification import (
    Filtration,
    InvalidQuotient,
    compositum_conductor,
    conductor_case,
    cyclotomic_filtration,
    herbrand,
    quotient_filtration,
    radical_step_conductor,
    trivial_filtration,
    upper_from_lower,
)
from .groups import (
    GenerationVerdict,
    MatrixElement,
    NoSolution,
    ResourceLimit,
    SylowData,
    element_order,
    generation_check,
    identity,
    minus_identity,
    solve_trace_system,
    standard_generators,
    sylow_data,
)
from .pipeline import PipelineError, PipelineReport, run_wild_monodromy

__all__ = [name for name in dir() if not name.startswith("_")]
