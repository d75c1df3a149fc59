"""mvkit: exact computations on moment varieties of product mixtures.

The library is organized in five layers: exact linear algebra (`exact`),
the combinatorial moment model (`model`), toric dimensions and binomial
generators (`toric`), secant dimension bounds (`secant`), explicit special
equations (`equations`), and the floating-point statistics pipeline
(`stats`).  The `mvkit` console script exposes the lot.
"""

from .equations import (
    MaskedMatrix,
    SparsePolynomial,
    Verdict,
    facet_pentads_63,
    m33_cubic,
    masked_hankel_63,
    masked_matrix_53,
    pentad,
    pentad_family,
    quadrilateral_set_quartic,
    quintic_53,
    sigma2_m44_cubics,
    verify_vanishing,
    visible_minors,
)
from .exact import (
    DEFAULT_PRIME,
    PrimeFieldMatrix,
    RationalMatrix,
    determinant,
    is_prime,
    nullspace_rational,
    random_prime,
    rank_mod_p,
    rank_rational,
)
from .model import (
    MixtureParams,
    Partition,
    Reduction,
    VarietySpec,
    build_a_matrix,
    enumerate_moments,
    enumerate_stratum,
    eval_parametrization,
    format_index,
    jacobian_secant,
    moment_vector,
    parse_index,
    reduce_partition,
    stratum_size,
)
from .secant import (
    DualCertificate,
    IlpInstance,
    bound_expected,
    bound_ilp_exhaustive,
    certify_greedy,
    conjecture_sweep,
    dim_secant_numeric,
    dim_secant_trials,
    greedy_ilp,
    greedy_packing,
    hamming_ball_size,
    tropical_guarantee,
)
from .stats import (
    EmpiricalMoments,
    SampleMatrix,
    empirical_moments,
    hamburger_check,
    hankel_psd,
    read_samples,
    test_statistics,
)
from .toric import (
    GeneratorReport,
    GradedBinomial,
    binomial_in_ideal,
    dim_from_a_matrix,
    dim_toric,
    dim_toric_stratum,
    hypersimplex_degree,
    ideal_generators_up_to,
    lift_binomial_phi,
    orbit_lift,
    phi_substitute,
)

__version__ = "0.1.0"
