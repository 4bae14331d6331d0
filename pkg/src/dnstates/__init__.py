"""su(2) and su(1,1) displaced number states.

Closed-form Fock expansions, photon-number distributions, Mandel-Q
statistics, quadrature squeezing, and the interaction Hamiltonians the
states diagonalize, all validated against a brute-force operator-
exponential oracle on (truncated) Fock space.
"""

__version__ = "0.1.0"

from .errors import (
    DimensionMismatchError,
    DnstatesError,
    DomainError,
    PrecisionLossError,
    SingularCouplingError,
    TruncationError,
    UndefinedQError,
)
from .oracle import (
    AlgebraKind,
    FockVector,
    GeneratorSet,
    build_generators,
    displaced_number_oracle,
    displacement_oracle,
    oracle_state,
    su11_start_dim,
)
from .coefficients import (
    CoeffValue,
    DistanceMetric,
    DistributionSource,
    PhotonDistribution,
    Su2Params,
    Su11Params,
    amplitude_profile_su2,
    amplitude_profile_su11,
    coeff_su2,
    coeff_su11,
    distribution_su2,
    distribution_su11,
    limit_comparison_su2,
    limit_comparison_su11,
    su11_window,
    total_variation,
)
from .photon_stats import (
    Classification,
    QBoundary,
    QStats,
    mandel_q_su2,
    mandel_q_su11,
    mean_n_su2,
    mean_n_su11,
    mean_n2_su2,
    mean_n2_su11,
    q_boundary_su2,
    q_boundary_su11,
    q_prime_su2,
    q_prime_su11,
)
from .squeezing import (
    QuadratureReport,
    ScanCell,
    SqueezingScan,
    quadrature_su2,
    quadrature_su11,
    squeezing_scan,
)
from .hamiltonians import (
    EnergyDomain,
    SpectralCheck,
    build_h2,
    build_h11,
    eigencheck,
    energy_domain,
    energy_su2,
    energy_su11,
)

__all__ = [
    "__version__",
    "AlgebraKind",
    "Classification",
    "CoeffValue",
    "DimensionMismatchError",
    "DistanceMetric",
    "DistributionSource",
    "DnstatesError",
    "DomainError",
    "EnergyDomain",
    "FockVector",
    "GeneratorSet",
    "PhotonDistribution",
    "PrecisionLossError",
    "QBoundary",
    "QStats",
    "QuadratureReport",
    "ScanCell",
    "SingularCouplingError",
    "SpectralCheck",
    "SqueezingScan",
    "Su2Params",
    "Su11Params",
    "TruncationError",
    "UndefinedQError",
    "amplitude_profile_su2",
    "amplitude_profile_su11",
    "build_generators",
    "build_h2",
    "build_h11",
    "coeff_su2",
    "coeff_su11",
    "displaced_number_oracle",
    "displacement_oracle",
    "distribution_su2",
    "distribution_su11",
    "eigencheck",
    "energy_domain",
    "energy_su2",
    "energy_su11",
    "limit_comparison_su2",
    "limit_comparison_su11",
    "mandel_q_su2",
    "mandel_q_su11",
    "mean_n_su2",
    "mean_n_su11",
    "mean_n2_su2",
    "mean_n2_su11",
    "oracle_state",
    "q_boundary_su2",
    "q_boundary_su11",
    "q_prime_su2",
    "q_prime_su11",
    "quadrature_su2",
    "quadrature_su11",
    "squeezing_scan",
    "su11_start_dim",
    "su11_window",
    "total_variation",
]
