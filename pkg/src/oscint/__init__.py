"""oscint: phase-fitted 14-step symmetric multistep integrators.

The package covers the classical 14-step method and its seven phase-fitted
variants PF-D0..PF-D6 (each flattening one more derivative of the phase lag
at the fitted frequency), plus the analysis machinery to verify them: exact
order conditions, phase-lag identities, characteristic-root stability scans,
a fixed-step driver with frequency schedules, and the radial scattering
benchmark that measures accuracy as matched digits of the phase shift.
"""

from .coefficients import (
    CancellationProfile,
    CoefficientSet,
    MethodId,
    ALL_METHODS,
    FITTED_METHODS,
    cancellation_profile,
    classical_coefficients,
    closed_form_b,
    coefficients,
    taylor_b,
)
from .errors import OscintError
from .integrator import (
    FrequencySchedule,
    SecondOrderIVP,
    Trajectory,
    bootstrap,
    integrate,
    kernel_backend,
    step,
)
from .phaselag import (
    OrderConditionVector,
    StencilWeights,
    order_conditions,
    phase_lag,
    phase_lag_derivative,
    plte_polynomial,
    stencil_weights,
)
from .schrodinger import (
    PhaseShiftResult,
    RadialScatteringProblem,
    WoodsSaxonParams,
    benchmark_sweep,
    solve_phase_shift,
    spherical_bessel_j,
    spherical_neumann_n,
    tan_delta,
    woods_saxon,
)
from .stability import (
    CharacteristicPolynomial,
    StabilityGrid,
    characteristic_polynomial,
    is_stable,
    periodicity_endpoint,
    polynomial_roots,
    scan_region,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_METHODS",
    "CancellationProfile",
    "CharacteristicPolynomial",
    "CoefficientSet",
    "FITTED_METHODS",
    "FrequencySchedule",
    "MethodId",
    "OrderConditionVector",
    "OscintError",
    "PhaseShiftResult",
    "RadialScatteringProblem",
    "SecondOrderIVP",
    "StabilityGrid",
    "StencilWeights",
    "Trajectory",
    "WoodsSaxonParams",
    "benchmark_sweep",
    "bootstrap",
    "cancellation_profile",
    "characteristic_polynomial",
    "classical_coefficients",
    "closed_form_b",
    "coefficients",
    "integrate",
    "is_stable",
    "kernel_backend",
    "order_conditions",
    "periodicity_endpoint",
    "phase_lag",
    "phase_lag_derivative",
    "plte_polynomial",
    "polynomial_roots",
    "scan_region",
    "solve_phase_shift",
    "spherical_bessel_j",
    "spherical_neumann_n",
    "stencil_weights",
    "step",
    "tan_delta",
    "taylor_b",
    "woods_saxon",
    "__version__",
]
