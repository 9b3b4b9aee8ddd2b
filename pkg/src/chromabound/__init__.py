"""Lower bounds and verification oracles for chromatic numbers of
Euclidean space with several forbidden distances."""

__version__ = "0.1.0"

from .bound_engine import (
    BoundQuery,
    BoundResult,
    asymptotic_lower_bound,
    best_l,
    chromatic_lower_bound,
    kupavskii_upper_base,
    maximize_over_t,
    table,
    theta_ratio,
)
from .lattice_combinatorics import (
    CompositionProfile,
    alternating_square_identity,
    count_box,
    gf_upper_bound,
    is_prime,
    multinomial,
    multinomial_lemma_check,
    next_prime,
    prime_gap_report,
    profile_diameter,
    profile_diameter_bruteforce,
)
from .lattice_theta import (
    MuResult,
    TailBoundError,
    ThetaSeries,
    dn_series,
    dn_theta,
    double_cap_compare,
    e8_series,
    leech_series,
    mu_dn,
    mu_lattice,
    mu_z,
    ramanujan_tau,
)
from .special_functions import (
    ExponentialSum,
    GammaChiResult,
    functional_equation_residual,
    gamma_chi,
    jacobi_theta,
    one_minus_t_theta_max,
    theta_full,
    theta_truncated,
)
from .tensor_oracle import (
    CliqueBoundReport,
    DiameterError,
    NonPrimeModulusError,
    OddSquaredDistanceError,
    Permutation,
    PointConfig,
    SetPartition,
    clique_bound_check,
    distinctness_indicator,
    forbidden_distance_product,
    is_k_cycle,
    partition_coefficients,
    simplex_indicator,
    symmetric_group,
)

__all__ = [
    "BoundQuery",
    "BoundResult",
    "CliqueBoundReport",
    "CompositionProfile",
    "DiameterError",
    "ExponentialSum",
    "GammaChiResult",
    "MuResult",
    "NonPrimeModulusError",
    "OddSquaredDistanceError",
    "Permutation",
    "PointConfig",
    "SetPartition",
    "TailBoundError",
    "ThetaSeries",
    "alternating_square_identity",
    "asymptotic_lower_bound",
    "best_l",
    "chromatic_lower_bound",
    "clique_bound_check",
    "count_box",
    "distinctness_indicator",
    "dn_series",
    "dn_theta",
    "double_cap_compare",
    "e8_series",
    "forbidden_distance_product",
    "functional_equation_residual",
    "gamma_chi",
    "gf_upper_bound",
    "is_k_cycle",
    "is_prime",
    "jacobi_theta",
    "kupavskii_upper_base",
    "leech_series",
    "maximize_over_t",
    "multinomial",
    "multinomial_lemma_check",
    "mu_dn",
    "mu_lattice",
    "mu_z",
    "next_prime",
    "one_minus_t_theta_max",
    "partition_coefficients",
    "prime_gap_report",
    "profile_diameter",
    "profile_diameter_bruteforce",
    "ramanujan_tau",
    "simplex_indicator",
    "symmetric_group",
    "table",
    "theta_full",
    "theta_ratio",
    "theta_truncated",
]
