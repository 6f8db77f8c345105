"""Entropic uncertainty functions for Fourier-conjugate order pairs.

The Rényi uncertainty function is the slack of the Zozor-Portesi-Vignat
inequality,

    xi[R] = R_alpha[rho] + R_beta[gamma] - ln(pi alpha^(1/(2 alpha - 2))
                                               beta^(1/(2 beta - 2))),

and the Tsallis one is the slack of the Sobolev inequality written through
the Tsallis entropies,

    xi[T] = (alpha/pi)^(1/4 alpha) ((1-alpha) T_alpha[rho] + 1)^(1/2 alpha)
          - (beta/pi)^(1/4 beta) ((1-beta) T_beta[gamma] + 1)^(1/2 beta),

both with 1/alpha + 1/beta = 2; the Tsallis form additionally requires
1/2 < alpha <= 1.  Zero slack means the state saturates the inequality
(the harmonic ground state does; the deformed one does not).

Position-side entropies take the closed-form path whenever the order is an
integer >= 2 and silently fall back to quadrature otherwise; the result
records which engine produced the position side.  The momentum side is
always numeric.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import ModelParams
from .position_entropy import EntropyOrder, log_entropic_moment
from .quadrature import entropic_moment_numeric, renyi_numeric

__all__ = ["ConjugatePair", "XiResult", "conjugate_order", "xi_renyi", "xi_tsallis"]

#: inequality slack below this is treated as a numerical failure, not physics
_NEGATIVE_TOL = 1e-9


@dataclass(frozen=True)
class ConjugatePair:
    """Order pair with 1/alpha + 1/beta = 2 (beta = alpha / (2 alpha - 1))."""

    alpha: float
    beta: float


@dataclass(frozen=True)
class XiResult:
    """Uncertainty-function value plus the engine used for the position side."""

    value: float
    position_method: str  # "analytic" or "quadrature"

    def __float__(self) -> float:
        return self.value


def conjugate_order(alpha: float) -> ConjugatePair:
    """Conjugate pair of ``alpha``; requires alpha > 1/2."""
    if not (alpha > 0.5) or not math.isfinite(alpha):
        raise ValueError(f"conjugate order requires alpha > 1/2, got {alpha}")
    return ConjugatePair(alpha=float(alpha), beta=alpha / (2.0 * alpha - 1.0))


def _log_moment_position(params: ModelParams, n: int, alpha: float) -> tuple[float, str]:
    """ln W in position space: closed form when eligible, else quadrature."""
    order = EntropyOrder.of(alpha)
    if order.analytic_eligible:
        return log_entropic_moment(params, n, int(alpha)), "analytic"
    return math.log(entropic_moment_numeric(params, n, alpha, "position")), "quadrature"


def _check_slack(value: float, what: str) -> float:
    if value < -_NEGATIVE_TOL:
        raise ArithmeticError(
            f"{what} slack {value:.3e} below -{_NEGATIVE_TOL}: quadrature failure"
        )
    return value


def xi_renyi(params: ModelParams, n: int, alpha: float) -> XiResult:
    """Slack of the Rényi uncertainty relation at position order ``alpha``."""
    pair = conjugate_order(alpha)
    if alpha == 1.0:
        raise ValueError("alpha = 1 is the Shannon case; the Rényi slack needs alpha != 1")
    log_w_pos, method = _log_moment_position(params, n, pair.alpha)
    r_pos = log_w_pos / (1.0 - pair.alpha)
    r_mom = renyi_numeric(params, n, pair.beta, "momentum")
    bound = (
        math.log(math.pi)
        + math.log(pair.alpha) / (2.0 * pair.alpha - 2.0)
        + math.log(pair.beta) / (2.0 * pair.beta - 2.0)
    )
    return XiResult(_check_slack(r_pos + r_mom - bound, "Rényi"), method)


def xi_tsallis(params: ModelParams, n: int, alpha: float) -> XiResult:
    """Slack of the Tsallis (Sobolev) uncertainty relation, 1/2 < alpha <= 1.

    Written directly through the entropic moments: (1 - a) T_a + 1 = W_a.
    At alpha = 1 both sides coincide and the slack is exactly zero.
    """
    if not (0.5 < alpha <= 1.0):
        raise ValueError(f"Tsallis slack requires 1/2 < alpha <= 1, got {alpha}")
    if alpha == 1.0:
        return XiResult(0.0, "analytic")
    pair = conjugate_order(alpha)
    log_w_pos, method = _log_moment_position(params, n, pair.alpha)
    w_mom = entropic_moment_numeric(params, n, pair.beta, "momentum")
    left = (pair.alpha / math.pi) ** (1.0 / (4.0 * pair.alpha)) * math.exp(
        log_w_pos / (2.0 * pair.alpha)
    )
    right = (pair.beta / math.pi) ** (1.0 / (4.0 * pair.beta)) * w_mom ** (
        1.0 / (2.0 * pair.beta)
    )
    return XiResult(_check_slack(left - right, "Tsallis"), method)
