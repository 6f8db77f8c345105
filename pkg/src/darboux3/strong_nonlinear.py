"""Large-nonlinearity machinery.

The position density splits exactly into a harmonic-like part and a
mass-profile-induced part,

    rho_n = rho_n^(0) + lam * rho_n^(2),     rho_n^(m) = N^2 x^m e^(-Omega x^2) H_n^2,

with weights f = 1 / (1 + (n + 1/2) lam / Omega) and 1 - f.  When f is
small the wave function is well approximated by the induced part alone,

    phi_n(x) = sqrt(lam) N |x| e^(-Omega x^2 / 2) H_n(sqrt(Omega) x),

whose Fourier transform IS available in closed form through the Dawson F
function; n = 0..3 are hard-coded and a general-n series engine evaluates

    FT phi_n = sqrt(lam / 2 pi) (N / Omega) e^(-P^2/2) *
               Par[ sum_k C(n,k) 2^(n-k) H_k(-iP) g_(n,k)(P) ],   P = p / sqrt(Omega),

where Par[.] keeps twice the real (even n) or i times twice the imaginary
(odd n) part and g_(n,k)(P) = I_(n-k+1) - iP I_(n-k) with half-line moments
I_m = integral_(iP)^inf u^m e^(-u^2/2) du.  The moments follow the exact
two-term recursion I_m = (iP)^(m-1) e^(P^2/2) + (m-1) I_(m-2) down to
I_0 (a Dawson term) and I_1 (a Gaussian); everything is carried with the
e^(P^2/2) factor removed so nothing overflows.  The published form omits
the 2^(n-k) factor of the Hermite translation identity; it is restored
here (the n <= 3 closed forms and the numeric transform of phi agree).

This module also provides the density critical points and the exact
maximum-splitting thresholds lam_c = omega/sqrt(2) (n = 0) and
lam_c = 5 omega/sqrt(26) (n = 2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .model import (
    ModelParams,
    density_position,
    effective_frequency,
    log_norm_constant,
    norm_constant,
)
from .specfun import dawson, dawson_vec, hermite

__all__ = [
    "DensitySplit",
    "CriticalPoint",
    "harmonic_weight",
    "approx_wavefunction",
    "approx_momentum_closed",
    "g_series_transform",
    "density_critical_points",
    "bifurcation_threshold",
]

_MAX_SERIES_N = 8


@dataclass(frozen=True)
class DensitySplit:
    """Probability carried by the harmonic-like part (f) and the rest."""

    f: float
    complement: float


@dataclass(frozen=True)
class CriticalPoint:
    """Stationary point of the position density."""

    x: float
    kind: str  # "maximum" | "minimum" | "undulation"


def harmonic_weight(params: ModelParams, n: int) -> DensitySplit:
    """Exact split f = 1 / (1 + (n + 1/2) lam / Omega); f = 1 at lam = 0."""
    om = effective_frequency(params, n)
    f = 1.0 / (1.0 + (n + 0.5) * params.lam / om)
    return DensitySplit(f=f, complement=1.0 - f)


def approx_wavefunction(params: ModelParams, n: int, x) -> float | np.ndarray:
    """Large-nonlinearity approximant phi_n; integrates to 1 - f, not 1."""
    xa = np.atleast_1d(np.asarray(x, dtype=float))
    om = effective_frequency(params, n)
    out = (
        math.sqrt(params.lam)
        * norm_constant(params, n)
        * np.abs(xa)
        * np.exp(-0.5 * om * xa * xa)
        * hermite(n, math.sqrt(om) * xa)
    )
    return float(out[0]) if np.asarray(x).ndim == 0 else out


# --------------------------------------------------------------------------
# closed-form transforms of phi_n for n = 0..3
# --------------------------------------------------------------------------

def approx_momentum_closed(params: ModelParams, n: int, p) -> complex | np.ndarray:
    """Dawson-function closed forms of FT phi_n for n in {0, 1, 2, 3}.

    Real for even n, purely imaginary for odd n.
    """
    if n not in (0, 1, 2, 3):
        raise ValueError(f"closed forms exist for n = 0..3 only, got {n}")
    pa = np.atleast_1d(np.asarray(p, dtype=float))
    lam = params.lam
    om = effective_frequency(params, n)
    F = dawson_vec(pa / math.sqrt(2.0 * om))
    pi34 = math.pi ** 0.75
    if n == 0:
        amp = 2.0 * math.sqrt(lam * om**1.5 / (lam + 2.0 * om)) / (pi34 * om**1.5)
        out = amp * (math.sqrt(om) - math.sqrt(2.0) * pa * F) + 0j
    elif n == 1:
        amp = -2.0j * math.sqrt(lam * om**1.5 / (3.0 * lam + 2.0 * om)) / (pi34 * om**2)
        out = amp * (2.0 * (om - pa**2) * F + math.sqrt(2.0) * pa * math.sqrt(om))
    elif n == 2:
        amp = math.sqrt(lam * om**1.5 / (10.0 * lam + 4.0 * om)) / pi34
        out = amp * (
            2.0 * math.sqrt(2.0) * (2.0 * pa**3 - 5.0 * pa * om) * F / om**2.5
            + (6.0 * om - 4.0 * pa**2) / om**2
        ) + 0j
    else:
        amp = -2.0j * math.sqrt(lam * om**1.5 / (21.0 * lam + 6.0 * om)) / (pi34 * om**3)
        out = amp * (
            math.sqrt(2.0) * (2.0 * pa**4 - 9.0 * pa**2 * om + 3.0 * om**2) * F
            + pa * math.sqrt(om) * (7.0 * om - 2.0 * pa**2)
        )
    return out if np.asarray(p).ndim else complex(out[0])


# --------------------------------------------------------------------------
# general-n series engine
# --------------------------------------------------------------------------

def _half_line_moments(big_p: float, m_max: int) -> np.ndarray:
    """Ihat_m = e^(-P^2/2) * integral_(iP)^inf u^m e^(-u^2/2) du, m = 0..m_max.

    Ihat_0 = sqrt(pi/2) e^(-P^2/2) - i sqrt(2) F(P / sqrt(2)); Ihat_1 = 1;
    Ihat_m = (iP)^(m-1) + (m-1) Ihat_(m-2)   (integration by parts).
    """
    out = np.empty(m_max + 1, dtype=complex)
    out[0] = math.sqrt(math.pi / 2.0) * math.exp(-0.5 * big_p * big_p) - 1j * math.sqrt(
        2.0
    ) * dawson(big_p / math.sqrt(2.0))
    if m_max >= 1:
        out[1] = 1.0
    ip = 1j * big_p
    for m in range(2, m_max + 1):
        out[m] = ip ** (m - 1) + (m - 1) * out[m - 2]
    return out


def _hermite_imag(n_max: int, big_p: float) -> np.ndarray:
    """H_k(-iP) for k = 0..n_max (purely real/imaginary alternating)."""
    out = np.empty(n_max + 1, dtype=complex)
    out[0] = 1.0
    if n_max >= 1:
        out[1] = -2j * big_p
    for k in range(1, n_max):
        out[k + 1] = -2j * big_p * out[k] - 2.0 * k * out[k - 1]
    return out


def _series_value(n: int, big_p: float) -> complex:
    """Par[ sum_k C(n,k) 2^(n-k) H_k(-iP) ghat_(n,k) ] with the e^(P^2/2)
    factor already removed from the moments."""
    moments = _half_line_moments(big_p, n + 1)
    herms = _hermite_imag(n, big_p)
    total = 0j
    for k in range(n + 1):
        ghat = moments[n - k + 1] - 1j * big_p * moments[n - k]
        total += math.comb(n, k) * 2.0 ** (n - k) * herms[k] * ghat
    return 2.0 * total.real if n % 2 == 0 else 2j * total.imag


def _series_reference(n: int, big_p: float) -> complex:
    """Direct quadrature of e^(-P^2/2) * Par[...] along u = iP + s, s >= 0:
    the independent residual oracle for the recursion."""
    from numpy.polynomial.legendre import leggauss

    s_max = 10.0 + math.sqrt(2.0 * n + 1.0)
    xs, ws = leggauss(240)
    s = 0.5 * s_max * (xs + 1.0)
    w = 0.5 * s_max * ws
    u = 1j * big_p + s
    total = 0j
    for k in range(n + 1):
        integrand = s * u ** (n - k) * np.exp(-0.5 * s * s - 1j * big_p * s)
        g = np.sum(w * integrand)
        total += math.comb(n, k) * 2.0 ** (n - k) * complex(_hermite_imag(k, big_p)[k]) * g
    return 2.0 * total.real if n % 2 == 0 else 2j * total.imag


@lru_cache(maxsize=64)
def _series_residual_ok(n: int) -> bool:
    """Residual check of the recursion against contour quadrature at 8 probes."""
    for big_p in (0.0, 0.3, 0.7, 1.2, 2.0, 3.0, 5.0, 8.0):
        a = _series_value(n, big_p)
        b = _series_reference(n, big_p)
        scale = max(abs(a), abs(b), 1e-30)
        if abs(a - b) / scale > 1e-6:
            return False
    return True


def g_series_transform(params: ModelParams, n: int, p, *, n_cap: int = _MAX_SERIES_N):
    """General-n FT of phi_n via the half-line-moment recursion.

    Agrees with :func:`approx_momentum_closed` for n <= 3 to 1e-10 relative;
    raises if ``n`` exceeds the cap or the recursion fails its residual check.
    """
    if n < 0 or n > n_cap:
        raise ValueError(f"series transform supports 0 <= n <= {n_cap}, got {n}")
    if not _series_residual_ok(n):
        raise ArithmeticError(
            f"half-line moment recursion lost more than 6 digits at n={n}"
        )
    om = effective_frequency(params, n)
    amp = (
        math.sqrt(params.lam / (2.0 * math.pi))
        * math.exp(log_norm_constant(params, n))
        / om
    )
    pa = np.atleast_1d(np.asarray(p, dtype=float))
    out = np.array([amp * _series_value(n, float(v) / math.sqrt(om)) for v in pa])
    return out if np.asarray(p).ndim else complex(out[0])


# --------------------------------------------------------------------------
# density critical points and thresholds
# --------------------------------------------------------------------------

def _second_derivative_density(params: ModelParams, n: int, x: float, h: float) -> float:
    """Five-point central second derivative of rho_n at x."""
    f = lambda t: density_position(params, n, t)
    return (
        -f(x + 2 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2 * h)
    ) / (12.0 * h * h)


def _classify(params: ModelParams, n: int, x: float) -> str:
    om = effective_frequency(params, n)
    h = 0.02 / math.sqrt(om)
    d2 = _second_derivative_density(params, n, x, h)
    scale = density_position(params, n, x) * om + abs(d2)
    if abs(d2) <= 1e-7 * max(scale, 1e-300):
        return "undulation"
    return "maximum" if d2 < 0.0 else "minimum"


def _classify_origin(params: ModelParams, n: int) -> str:
    """At x = 0 the sign of rho'' is the sign of lam - Omega (n = 0) or
    lam - 5 Omega (n = 2), read off the exact second-derivative formulas."""
    om = effective_frequency(params, n)
    disc = params.lam - om if n == 0 else params.lam - 5.0 * om
    if abs(disc) <= 5e-12 * (params.lam + om):
        return "undulation"
    return "minimum" if disc > 0.0 else "maximum"


def density_critical_points(
    params: ModelParams, n: int, *, numeric: bool = False
) -> list[CriticalPoint]:
    """Critical points of rho_n, sorted by position.

    Closed forms for n in {0, 2} (the origin plus the splitting pair and,
    for n = 2, the outer maxima); ``numeric=True`` enables bracketed
    root-finding on the extremum polynomial for any n (Hermite zeros, which
    are density minima, are appended directly).
    """
    if numeric:
        return _critical_points_numeric(params, n)
    if n not in (0, 2):
        raise ValueError("closed-form critical points exist for n in {0, 2}; use numeric=True")
    lam = params.lam
    om = effective_frequency(params, n)
    pts = [CriticalPoint(0.0, _classify_origin(params, n))]
    if n == 0:
        if lam > 0.0 and lam > om:
            xr = math.sqrt((lam - om) / (lam * om))
            pts = [CriticalPoint(-xr, _classify(params, n, xr))] + pts + [
                CriticalPoint(xr, _classify(params, n, xr))
            ]
        return pts
    root = math.sqrt(41.0 * lam * lam + 12.0 * lam * om + 4.0 * om * om)
    outer_sq = 0.25 * (7.0 / om - (2.0 / lam if lam > 0.0 else 0.0) + (root / (lam * om) if lam > 0.0 else 0.0))
    if lam == 0.0:
        outer_sq = 0.25 * (7.0 / om + 3.0 / om)  # lam -> 0 limit of the pair
    inner_sq = 0.25 * (7.0 / om - 2.0 / lam - root / (lam * om)) if lam > 0.0 else -1.0
    x_out = math.sqrt(outer_sq)
    pts = [CriticalPoint(-x_out, _classify(params, n, x_out))] + pts + [
        CriticalPoint(x_out, _classify(params, n, x_out))
    ]
    if inner_sq > 0.0:
        x_in = math.sqrt(inner_sq)
        pts = (
            [pts[0]]
            + [CriticalPoint(-x_in, _classify(params, n, x_in))]
            + [pts[1]]
            + [CriticalPoint(x_in, _classify(params, n, x_in))]
            + [pts[2]]
        )
    return sorted(pts, key=lambda c: c.x)


def _extremum_function(params: ModelParams, n: int, x: float) -> float:
    """4 n sqrt(Om) (lam x^2 + 1) H_(n-1) - 2 x (lam (x^2 Om - 1) + Om) H_n,
    whose roots are the density critical points with Hermite zeros removed."""
    lam = params.lam
    om = effective_frequency(params, n)
    s = math.sqrt(om)
    h_n = hermite(n, s * x)
    h_nm1 = hermite(n - 1, s * x) if n >= 1 else 0.0
    return 4.0 * n * s * (lam * x * x + 1.0) * h_nm1 - 2.0 * x * (
        lam * (x * x * om - 1.0) + om
    ) * h_n


def _critical_points_numeric(params: ModelParams, n: int) -> list[CriticalPoint]:
    om = effective_frequency(params, n)
    reach = (math.sqrt(2.0 * n + 1.0) + 4.0) / math.sqrt(om)
    m_pts = 400 * (n + 2)
    grid = np.linspace(0.5 * reach / m_pts, reach, m_pts)  # x = 0 handled separately
    vals = np.array([_extremum_function(params, n, float(t)) for t in grid])
    hz = set(np.round(np.abs(hermite_zeros(n)) / math.sqrt(om), 9))
    found = []
    for i in range(len(grid) - 1):
        if vals[i] * vals[i + 1] < 0.0:
            a, b = float(grid[i]), float(grid[i + 1])
            fa = float(vals[i])
            for _ in range(80):
                m = 0.5 * (a + b)
                fm = _extremum_function(params, n, m)
                if (fa < 0) != (fm < 0):
                    b = m
                else:
                    a, fa = m, fm
            r = 0.5 * (a + b)
            if round(r, 9) not in hz and r > 1e-9:
                found.append(r)
    pts = [CriticalPoint(0.0, _classify(params, n, 0.0))]
    for r in found:
        k = _classify(params, n, r)
        pts.append(CriticalPoint(r, k))
        pts.append(CriticalPoint(-r, k))
    for z in sorted(hz):
        if z > 1e-9:
            pts.append(CriticalPoint(float(z), "minimum"))
            pts.append(CriticalPoint(-float(z), "minimum"))
    return sorted(pts, key=lambda c: c.x)


def hermite_zeros(n: int) -> list[float]:
    """Zeros of H_n (empty for n = 0)."""
    from numpy.polynomial.hermite import hermgauss

    return [] if n == 0 else [float(z) for z in hermgauss(n)[0]]


def bifurcation_threshold(params: ModelParams, n: int) -> float:
    """Nonlinearity lam_c where the central maximum of rho_n degenerates.

    Closed forms omega/sqrt(2) (n = 0) and 5 omega/sqrt(26) (n = 2), always
    cross-checked against a bisection on the sign of the numerically
    differentiated rho''(0); both must agree to 1e-10.
    """
    if n not in (0, 2):
        raise ValueError(f"thresholds are known for n in {{0, 2}}, got {n}")
    closed = params.omega / math.sqrt(2.0) if n == 0 else 5.0 * params.omega / math.sqrt(26.0)

    def curvature(lam: float) -> float:
        q = ModelParams(params.omega, lam)
        om = effective_frequency(q, n)
        h = 0.01 / math.sqrt(om)
        d2a = _second_derivative_density(q, n, 0.0, h)
        d2b = _second_derivative_density(q, n, 0.0, h / 2.0)
        return (16.0 * d2b - d2a) / 15.0  # Richardson: O(h^6) residual

    lo, hi = 0.05 * params.omega, 4.0 * params.omega
    if not curvature(lo) < 0.0 < curvature(hi):
        raise ArithmeticError("threshold bracket failed; curvature signs unexpected")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if curvature(mid) < 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-12 * params.omega:
            break
    bisected = 0.5 * (lo + hi)
    if abs(bisected - closed) > 1e-10 * (1.0 + closed):
        raise ArithmeticError(
            f"threshold mismatch: closed {closed!r} vs bisected {bisected!r}"
        )
    return closed
