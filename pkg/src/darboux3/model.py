"""Darboux III oscillator model: parameters, spectrum and position-space states.

The one-dimensional Darboux III oscillator is a position-dependent-mass
deformation of the harmonic oscillator, mass profile mu(x) = 1 + lam * x^2.
In units with hbar = 1 its bound states have

    E_n      = -lam (n + 1/2)^2 + (n + 1/2) sqrt(lam^2 (n + 1/2)^2 + omega^2)
    Omega_n  = sqrt(omega^2 - 2 lam E_n)            (effective frequency)
    Psi_n(x) = N sqrt(1 + lam x^2) exp(-Omega x^2 / 2) H_n(sqrt(Omega) x)

with N the normalisation constant.  Setting lam = 0 recovers the harmonic
oscillator through the same code path; there is no special branch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .specfun import hermite_sign_logabs, log_gamma

__all__ = [
    "ModelParams",
    "StateSpectrum",
    "energy",
    "effective_frequency",
    "norm_constant",
    "state_spectrum",
    "wavefunction",
    "density_position",
]

_LOG_UNDERFLOW = -745.0  # exp() underflows to 0 below this


@dataclass(frozen=True)
class ModelParams:
    """Physical parameters of the oscillator.

    Parameters
    ----------
    omega : float
        Oscillator frequency, must be positive.
    lam : float
        Nonlinearity (mass-profile) parameter, must be non-negative.
        Negative values are rejected; they change the spectral problem
        qualitatively and are out of scope here.
    hbar : float
        Fixed to 1; kept as an explicit field so the unit convention is
        visible at call sites.
    """

    omega: float = 1.0
    lam: float = 0.0
    hbar: float = field(default=1.0)

    def __post_init__(self):
        if not (math.isfinite(self.omega) and self.omega > 0.0):
            raise ValueError(f"omega must be positive and finite, got {self.omega}")
        if not (math.isfinite(self.lam) and self.lam >= 0.0):
            raise ValueError(f"lam must be non-negative and finite, got {self.lam}")
        if self.hbar != 1.0:
            raise ValueError("hbar is fixed to 1 in this package")


@dataclass(frozen=True)
class StateSpectrum:
    """Per-level derived quantities for quantum number ``n``."""

    n: int
    energy: float
    effective_frequency: float
    norm_constant: float


def _check_level(n: int) -> None:
    if n < 0 or n != int(n):
        raise ValueError(f"quantum number must be a non-negative integer, got {n}")


def energy(params: ModelParams, n: int) -> float:
    """Energy eigenvalue E_n.

    Evaluated as (n + 1/2) * omega^2 / (sqrt(lam^2 (n+1/2)^2 + omega^2)
    + lam (n+1/2)); algebraically identical to the textbook form
    -lam (n+1/2)^2 + (n+1/2) sqrt(lam^2 (n+1/2)^2 + omega^2) but free of
    subtractive cancellation at large lam * n.
    """
    _check_level(n)
    m = n + 0.5
    root = math.sqrt((params.lam * m) ** 2 + params.omega**2)
    return m * params.omega**2 / (root + params.lam * m)


def effective_frequency(params: ModelParams, n: int) -> float:
    """Effective frequency Omega_n = sqrt(omega^2 - 2 lam E_n).

    The radicand is the perfect square (sqrt(lam^2 m^2 + omega^2) - lam m)^2
    with m = n + 1/2, so Omega_n = omega^2 / (sqrt(lam^2 m^2 + omega^2)
    + lam m) exactly; that stable form is used here.
    """
    _check_level(n)
    m = n + 0.5
    root = math.sqrt((params.lam * m) ** 2 + params.omega**2)
    return params.omega**2 / (root + params.lam * m)


def log_norm_constant(params: ModelParams, n: int) -> float:
    """ln N for the state ``n``; assembled fully in log space."""
    _check_level(n)
    om = effective_frequency(params, n)
    m = n + 0.5
    return (
        0.25 * math.log(om / math.pi)
        - 0.5 * (n * math.log(2.0) + log_gamma(n + 1.0))
        - 0.5 * math.log1p(m * params.lam / om)
    )


def norm_constant(params: ModelParams, n: int) -> float:
    """Normalisation constant N of Psi_n; exponentiated only at the end."""
    return math.exp(log_norm_constant(params, n))


def state_spectrum(params: ModelParams, n: int) -> StateSpectrum:
    """Bundle E_n, Omega_n and N for level ``n``."""
    return StateSpectrum(
        n=n,
        energy=energy(params, n),
        effective_frequency=effective_frequency(params, n),
        norm_constant=norm_constant(params, n),
    )


def _log_envelope(params: ModelParams, n: int, xa: np.ndarray):
    """sign(H_n) and ln|Psi_n| elementwise (log-space assembly)."""
    om = effective_frequency(params, n)
    sign, log_h = hermite_sign_logabs(n, math.sqrt(om) * xa)
    log_psi = (
        log_norm_constant(params, n)
        + 0.5 * np.log1p(params.lam * xa * xa)
        - 0.5 * om * xa * xa
        + log_h
    )
    return sign, log_psi


def wavefunction(params: ModelParams, n: int, x) -> float | np.ndarray:
    """Position-space eigenfunction Psi_n(x); parity (-1)^n under x -> -x.

    Where the Gaussian envelope underflows double precision the exact value
    0 is returned: densities below 1e-300 are irrelevant to every integral
    at this package's tolerances.
    """
    _check_level(n)
    xa = np.atleast_1d(np.asarray(x, dtype=float))
    sign, log_psi = _log_envelope(params, n, xa)
    out = np.where(
        (sign != 0) & (log_psi > _LOG_UNDERFLOW),
        sign * np.exp(np.minimum(log_psi, 700.0)),
        0.0,
    )
    return float(out[0]) if np.asarray(x).ndim == 0 else out


def density_position(params: ModelParams, n: int, x) -> float | np.ndarray:
    """Position-space probability density rho_n(x) = |Psi_n(x)|^2."""
    _check_level(n)
    xa = np.atleast_1d(np.asarray(x, dtype=float))
    sign, log_psi = _log_envelope(params, n, xa)
    out = np.where(
        (sign != 0) & (2.0 * log_psi > _LOG_UNDERFLOW),
        np.exp(np.minimum(2.0 * log_psi, 700.0)),
        0.0,
    )
    return float(out[0]) if np.asarray(x).ndim == 0 else out
