"""Entropic structure of the one-dimensional Darboux III quantum oscillator.

A numerics library for the position-dependent-mass oscillator with mass
profile 1 + lam * x^2: exact spectra and eigenstates, closed-form entropic
moments and Rényi/Tsallis entropies in position space, quadrature-based
momentum-space entropies via the numerical Fourier transform, entropic
uncertainty functions, and the large-nonlinearity approximation machinery.
"""

from .model import (
    ModelParams,
    StateSpectrum,
    density_position,
    effective_frequency,
    energy,
    norm_constant,
    state_spectrum,
    wavefunction,
)
from .position_entropy import (
    BudgetExceededError,
    EntropyOrder,
    ExpansionCoefficients,
    disequilibrium,
    entropic_moment,
    entropic_moment_special,
    expansion_coefficients,
    parity_nu,
    renyi_position,
    tsallis_position,
)
from .quadrature import (
    GridSpec,
    MomentumProfile,
    entropic_moment_numeric,
    fourier_transform,
    integrate,
    momentum_density,
    momentum_profile,
    renyi_numeric,
    shannon_numeric,
    tsallis_numeric,
)
from .specfun import (
    ScaledValue,
    dawson,
    hermite,
    hermite_scaled,
    log_gamma,
    pochhammer,
    upper_incomplete_gamma,
)
from .strong_nonlinear import (
    CriticalPoint,
    DensitySplit,
    approx_momentum_closed,
    approx_wavefunction,
    bifurcation_threshold,
    density_critical_points,
    g_series_transform,
    harmonic_weight,
)
from .uncertainty import ConjugatePair, XiResult, conjugate_order, xi_renyi, xi_tsallis

__version__ = "0.1.0"
