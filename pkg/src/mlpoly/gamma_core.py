"""Gamma-function kernel.

Everything downstream reduces to gamma ratios: the fractional binomial,
the Stieltjes moments of the one-sided Levy stable law, and the moments of
the subordination density.  Ratios are always evaluated as ``exp`` of
log-gamma differences, never as quotients of two gamma values, so that
moderately large arguments cannot overflow an intermediate.
"""

import math

from scipy.special import gammaln as _gammaln

from . import config
from .errors import DomainError, IndeterminateFormError

_PI = math.pi


def _require_finite(x, name):
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}")


def _nonpos_int(x):
    """True exactly on the poles of the gamma function (0, -1, -2, ...).

    Exact comparison on purpose: float integers are exact, and arguments a
    few ulps off a pole have perfectly representable (tiny or huge) values.
    """
    return x <= 0.0 and x == round(x)


def _near_pole(x, tol=1e-12):
    """Noise-tolerant pole detection for user-supplied ratio arguments."""
    r = round(x)
    return r <= 0 and abs(x - r) <= tol * max(1.0, abs(x))


def _sinpi(x):
    # sin(pi*x) with argument reduction; plain sin(pi*x) loses relative
    # accuracy near the integers where the reflection formula needs it most.
    n = round(x)
    s = math.sin(_PI * (x - n))
    return -s if n % 2 else s


def ln_gamma(x):
    """Natural log of the gamma function for x > 0."""
    _require_finite(x, "x")
    if x <= 0.0:
        raise DomainError(f"ln_gamma requires x > 0, got {x}")
    return float(_gammaln(x))


def gamma(x):
    """Gamma function on the real line; raises at the poles 0, -1, -2, ..."""
    _require_finite(x, "x")
    if x >= 0.5:
        return math.exp(_gammaln(x))
    if _nonpos_int(x):
        raise DomainError(f"gamma pole at x = {x}")
    # reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return _PI / (_sinpi(x) * math.exp(_gammaln(1.0 - x)))


def rgamma(x):
    """Reciprocal gamma 1/Gamma(x), entire in x.

    Returns exactly 0.0 at the poles x = 0, -1, -2, ...; elsewhere the
    relative error target is ``config.RGAMMA_RTOL``.
    """
    _require_finite(x, "x")
    if x >= 0.5:
        return math.exp(-_gammaln(x))
    if _nonpos_int(x):
        return 0.0
    # 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi; Gamma(1-x) may overflow for
    # very negative x, which faithfully reflects the growth of 1/Gamma.
    return _sinpi(x) * math.exp(_gammaln(1.0 - x)) / _PI


def log_abs_rgamma(x):
    """(sign, log) decomposition of 1/Gamma(x): 1/Gamma(x) = sign * exp(log).

    At the poles of Gamma the pair ``(0.0, -inf)`` is returned, i.e. the
    reciprocal is an exact zero.  Used by the series evaluators to combine
    z**r / Gamma(arg) in log space without intermediate overflow.
    """
    _require_finite(x, "x")
    if x >= 0.5:
        return 1.0, -float(_gammaln(x))
    if _nonpos_int(x):
        return 0.0, -math.inf
    s = _sinpi(x)
    sign = 1.0 if s > 0 else -1.0
    return sign, math.log(abs(s)) + float(_gammaln(1.0 - x)) - math.log(_PI)


def frac_binom(n, r, alpha):
    """Fractional binomial coefficient Gamma(1+a*n) / [Gamma(1+a*r) Gamma(1+a*(n-r))].

    Reduces to the ordinary binomial coefficient at alpha = 1.
    """
    if n < 0 or r < 0 or int(n) != n or int(r) != r:
        raise DomainError(f"n, r must be nonnegative integers, got n={n}, r={r}")
    if r > n:
        raise DomainError(f"require r <= n, got r={r} > n={n}")
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")
    if alpha == 1.0:
        return float(math.comb(int(n), int(r)))
    return math.exp(
        _gammaln(1.0 + alpha * n)
        - _gammaln(1.0 + alpha * r)
        - _gammaln(1.0 + alpha * (n - r))
    )


def stieltjes_moment(alpha, sigma):
    """Moment of order sigma of the one-sided Levy stable law:
    Gamma(1 - sigma/alpha) / Gamma(1 - sigma).

    For sigma = -alpha*k with integer k >= 0 this is k! / Gamma(1 + alpha*k),
    the form the umbral shift produces.  When both gamma arguments sit on
    poles the ratio is 0/0 and an :class:`IndeterminateFormError` is raised;
    a pole in the numerator alone also has no finite value.
    """
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")
    _require_finite(sigma, "sigma")
    num_arg = 1.0 - sigma / alpha
    den_arg = 1.0 - sigma
    num_pole = _near_pole(num_arg)
    den_pole = _near_pole(den_arg)
    if num_pole and den_pole:
        raise IndeterminateFormError(
            f"0/0 form: both Gamma({num_arg}) and Gamma({den_arg}) are poles"
        )
    if num_pole:
        raise IndeterminateFormError(
            f"Gamma({num_arg}) pole: moment formula diverges at sigma={sigma}"
        )
    if den_pole:
        return 0.0
    return gamma(num_arg) * rgamma(den_arg)


def levy_subordination_moment(beta, m, t):
    """m-th moment of the inverse-stable subordination density:
    m! * t**(beta*m) / Gamma(1 + beta*m).
    """
    if not 0.0 < beta < 1.0:
        raise DomainError(f"beta must lie in (0, 1), got {beta}")
    if m < 0 or int(m) != m:
        raise DomainError(f"m must be a nonnegative integer, got {m}")
    if not t > 0.0:
        raise DomainError(f"t must be positive, got {t}")
    m = int(m)
    return math.factorial(m) * t ** (beta * m) * rgamma(1.0 + beta * m)
