"""102-avoiding inversion sequences, their companion lattice paths, and the
bijections and rank-refined counting formulas tying them together, with an
exhaustive conformance harness and an exact truncated-series engine."""

from .bijections import (
    Tiling,
    is_to_schroeder,
    is_to_tiling,
    phi,
    phi_inv,
    psi,
    psi_inv,
    schroeder_to_is,
    tiling_to_is,
)
from .formulas import (
    ballot,
    binom,
    count_102_rank,
    count_201_by_max,
    count_A_subset,
    count_pair_rank,
    fib,
)
from .fpaths import (
    LabeledFPath,
    LabeledStep,
    StepClass,
    classify_step,
    enumerate_lf,
    in_class_110,
    in_class_210,
    lf_stats,
    validate_lf,
)
from .harness import (
    CheckSpec,
    ConformanceReport,
    default_specs,
    matches_form_201,
    run_checks,
    run_default_suite,
)
from .inversions import (
    InversionSequence,
    Pattern,
    SeqStats,
    avoids,
    contains_pattern,
    enumerate_is,
    rank,
    reduce_word,
    stats,
)
from .paths import (
    DyckPath,
    PathStats,
    SchroederPath,
    UvdPath,
    count_dyck_final_descent,
    enumerate_dyck,
    enumerate_schroeder,
    enumerate_uvd,
    schroeder_block,
    schroeder_to_uvd,
    uvd_stats,
    uvd_to_schroeder,
    validate_schroeder,
    validate_uvd,
)
from .series import (
    BivariateSeries,
    IdentityId,
    IdentityReport,
    TruncatedSeries,
    catalan_series,
    sqrt1m4x,
    verify_all_identities,
    verify_identity,
)

__version__ = "0.1.0"
