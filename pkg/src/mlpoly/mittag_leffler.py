"""Series evaluators for the Mittag-Leffler family and the Wright function.

All evaluators share one engine: terms are produced in log space (so huge
intermediate terms cannot overflow), summed with Neumaier compensation, and
the run stops once two consecutive terms fall below ``tol * |partial sum|``.
The returned error estimate is a documented heuristic, not a proven bound:
last neglected terms (truncation), plus ``8 * eps * sum|terms|`` (summation
rounding under cancellation), plus ``32 * eps * max_exponent * |value|``
(rounding of the log-space exponents themselves, which dominates when the
terms carry exponents of hundreds).  An evaluation whose estimate exceeds
``HONESTY_FACTOR * max(tol*|value|, tol)`` is refused with a
:class:`ConvergenceError` instead of silently returning cancellation noise —
this is what bounds the honest domain for strongly alternating arguments
(large negative z at small alpha).
"""

import math
from dataclasses import dataclass

from . import config
from .errors import ConvergenceError, DomainError
from .gamma_core import log_abs_rgamma

_EPS = 2.220446049250313e-16
_SUM_ERR_FACTOR = 8.0
_EXP_ERR_FACTOR = 32.0


@dataclass(frozen=True)
class MLParams:
    """Parameter triple (alpha, beta, gamma) of the three-parameter function.

    ``alpha`` must be positive.  A negative integer ``gamma = -n`` truncates
    the series to n + 1 terms (the polynomial case).
    """

    alpha: float
    beta: float
    gamma: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and math.isfinite(self.beta) and math.isfinite(self.gamma)):
            raise DomainError("MLParams fields must be finite")
        if not self.alpha > 0.0:
            raise DomainError(f"alpha must be positive, got {self.alpha}")

    @property
    def truncates(self):
        """True when gamma is a negative integer or zero, so the series is finite."""
        return self.gamma <= 0.0 and self.gamma == int(self.gamma)


@dataclass(frozen=True)
class EvalResult:
    """Value of a truncated series together with its accounting."""

    value: float
    abs_error_estimate: float
    terms_used: int

    def __post_init__(self):
        if self.abs_error_estimate < 0.0:
            raise DomainError("abs_error_estimate must be nonnegative")


def _sum_series(term_fn, tol, budget, what):
    """Compensated summation of term_fn(0), term_fn(1), ... with stop control.

    ``term_fn(r)`` returns ``(term, exponent_scale)`` where exponent_scale is
    the magnitude of the log-space exponent pieces that produced the term.
    """
    tol = config.SERIES_TOL if tol is None else float(tol)
    budget = config.TERM_BUDGET if budget is None else int(budget)
    s = 0.0
    comp = 0.0
    sum_abs = 0.0
    max_scale = 1.0
    prev = math.inf
    converged = False
    used = 0
    last = 0.0
    for r in range(budget):
        t, scale = term_fn(r)
        used = r + 1
        sum_abs += abs(t)
        max_scale = max(max_scale, scale)
        # Neumaier update
        u = s + t
        if abs(s) >= abs(t):
            comp += (s - u) + t
        else:
            comp += (t - u) + s
        s = u
        thresh = tol * abs(s + comp)
        if r >= 1 and abs(t) <= thresh and abs(prev) <= thresh:
            last = abs(t)
            converged = True
            break
        prev = t
        last = abs(t)
    value = s + comp
    estimate = (
        last
        + (abs(prev) if math.isfinite(prev) else 0.0)
        + _SUM_ERR_FACTOR * _EPS * sum_abs
        + _EXP_ERR_FACTOR * _EPS * max_scale * abs(value)
    )
    if not converged:
        raise ConvergenceError(
            f"{what}: no convergence within {budget} terms "
            f"(partial={value!r}, estimate={estimate!r})",
            partial=value, error_estimate=estimate, terms_used=used,
        )
    allowance = config.HONESTY_FACTOR * max(tol * abs(value), tol)
    if estimate > allowance:
        raise ConvergenceError(
            f"{what}: rounding floor {estimate:.3e} exceeds the honest allowance "
            f"{allowance:.3e}; the argument lies outside the double-precision domain "
            f"(partial={value!r})",
            partial=value, error_estimate=estimate, terms_used=used,
        )
    return EvalResult(value, estimate, used)


def _powsign(z, r):
    """sign, log-magnitude of z**r (r >= 0 integer)."""
    if z == 0.0:
        return (1.0, 0.0) if r == 0 else (1.0, -math.inf)
    sign = -1.0 if (z < 0.0 and r % 2) else 1.0
    return sign, r * math.log(abs(z))


def ml_one(alpha, z, tol=None, budget=None):
    """One-parameter Mittag-Leffler function E_alpha(z) = sum z**r / Gamma(1+alpha*r)."""
    return ml_two(alpha, 1.0, z, tol=tol, budget=budget)


def ml_two(alpha, beta, z, tol=None, budget=None):
    """Two-parameter (Wiman) function E_{alpha,beta}(z) = sum z**r / Gamma(beta+alpha*r).

    beta = 0 is legal: the r = 0 term carries 1/Gamma(0) = 0 and drops out.
    """
    if not alpha > 0.0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    if not (math.isfinite(beta) and math.isfinite(z)):
        raise DomainError("beta and z must be finite")

    def term(r):
        gsign, glog = log_abs_rgamma(beta + alpha * r)
        if gsign == 0.0:
            return 0.0, 1.0
        zsign, zlog = _powsign(z, r)
        if zlog == -math.inf:
            return 0.0, 1.0
        return gsign * zsign * math.exp(glog + zlog), abs(glog) + abs(zlog)

    return _sum_series(term, tol, budget, f"E_({alpha},{beta})({z})")


def ml_three(alpha, beta, gamma, z, tol=None, budget=None):
    """Three-parameter (Prabhakar) function
    E^gamma_{alpha,beta}(z) = sum (gamma)_r z**r / (r! Gamma(beta+alpha*r)).

    The Pochhammer weight is accumulated as the running product
    gamma (gamma+1) ... (gamma+r-1), so a negative integer gamma truncates
    the series exactly.
    """
    MLParams(alpha, beta, gamma)  # validates alpha and finiteness
    if not beta > 0.0:
        raise DomainError(f"beta must be positive here, got {beta}")
    if not math.isfinite(z):
        raise DomainError("z must be finite")

    state = {"sign": 1.0, "log": 0.0}  # (gamma)_r for the current r

    def term(r):
        if r > 0:
            factor = gamma + (r - 1)
            if state["sign"] == 0.0 or factor == 0.0:
                state["sign"] = 0.0
            else:
                if factor < 0.0:
                    state["sign"] = -state["sign"]
                state["log"] += math.log(abs(factor))
        if state["sign"] == 0.0:
            return 0.0, 1.0
        gsign, glog = log_abs_rgamma(beta + alpha * r)
        if gsign == 0.0:
            return 0.0, 1.0
        zsign, zlog = _powsign(z, r)
        if zlog == -math.inf:
            return 0.0, 1.0
        lfact = math.lgamma(r + 1)
        value = (
            state["sign"] * gsign * zsign
            * math.exp(state["log"] + glog + zlog - lfact)
        )
        return value, abs(state["log"]) + abs(glog) + abs(zlog) + lfact

    return _sum_series(term, tol, budget, f"E^{gamma}_({alpha},{beta})({z})")


def wright(alpha, mu, z, tol=None, budget=None):
    """Wright function W_{alpha,mu}(z) = sum z**r / (r! Gamma(mu+alpha*r))."""
    if not alpha > 0.0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    if not (math.isfinite(mu) and math.isfinite(z)):
        raise DomainError("mu and z must be finite")

    def term(r):
        gsign, glog = log_abs_rgamma(mu + alpha * r)
        if gsign == 0.0:
            return 0.0, 1.0
        zsign, zlog = _powsign(z, r)
        if zlog == -math.inf:
            return 0.0, 1.0
        lfact = math.lgamma(r + 1)
        value = gsign * zsign * math.exp(glog + zlog - lfact)
        return value, abs(glog) + abs(zlog) + lfact

    return _sum_series(term, tol, budget, f"W_({alpha},{mu})({z})")


def relaxation_cole_cole(alpha, tau, t):
    """Cole-Cole relaxation E_alpha(-(t/tau)**alpha); equals 1 at t = 0.

    alpha = 1 is the Debye limit exp(-t/tau).
    """
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")
    if not tau > 0.0:
        raise DomainError(f"tau must be positive, got {tau}")
    if t < 0.0:
        raise DomainError(f"t must be nonnegative, got {t}")
    return ml_one(alpha, -((t / tau) ** alpha)).value


def relaxation_hn(alpha, beta, tau, t):
    """Havriliak-Negami relaxation
    1 - (t/tau)**(alpha*beta) * E^beta_{alpha,1+alpha*beta}(-(t/tau)**alpha).

    beta = 1 recovers the Cole-Cole function.
    """
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")
    if not beta > 0.0:
        raise DomainError(f"beta must be positive, got {beta}")
    if not tau > 0.0:
        raise DomainError(f"tau must be positive, got {tau}")
    if t < 0.0:
        raise DomainError(f"t must be nonnegative, got {t}")
    if t == 0.0:
        return 1.0
    u = (t / tau) ** alpha
    prab = ml_three(alpha, 1.0 + alpha * beta, beta, -u).value
    return 1.0 - u ** beta * prab
