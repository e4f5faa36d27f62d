"""Caputo fractional derivative of order 0 < alpha < 1.

The production rule is exact: on a generalized monomial x**g the Caputo
derivative is Gamma(1+g)/Gamma(1+g-alpha) * x**(g-alpha), and constants map
to zero.  A numerical L1 quadrature is provided purely as an independent
cross-check; nothing in the library consumes it.
"""

import math

import numpy as np
from scipy.special import gammaln as _gammaln

from . import config
from .errors import DomainError
from .fracpoly import FracPoly
from .gamma_core import rgamma


def _check_order(alpha):
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"Caputo order must lie in (0, 1), got {alpha}")


def caputo_monomial(gamma_exp, alpha):
    """Exact rule on x**gamma_exp: returns (coefficient, exponent).

    gamma_exp = 0 gives (0, 0) — constants are annihilated.  Exponents in
    (0, alpha) would map below exponent zero and are rejected.  Comparisons
    are snap-tolerant: exponents created by repeated float subtraction may
    sit a few ulps off 0 or alpha.
    """
    _check_order(alpha)
    snap = config.EXP_SNAP
    if not math.isfinite(gamma_exp) or gamma_exp < -snap:
        raise DomainError(f"exponent must be finite and >= 0, got {gamma_exp}")
    if abs(gamma_exp) <= snap:
        return 0.0, 0.0
    if gamma_exp < alpha - snap:
        raise DomainError(
            f"exponent {gamma_exp} in (0, alpha={alpha}) leaves the representable domain"
        )
    coeff = math.exp(_gammaln(1.0 + gamma_exp) - _gammaln(1.0 + gamma_exp - alpha))
    return coeff, max(gamma_exp - alpha, 0.0)


def caputo_poly(p, alpha):
    """Term-wise Caputo derivative of a :class:`FracPoly`."""
    _check_order(alpha)

    def rule(c, mu):
        try:
            factor, nu = caputo_monomial(mu, alpha)
        except DomainError as exc:
            raise DomainError(f"term with exponent {mu}: {exc}") from exc
        if factor == 0.0:
            return None
        return c * factor, nu

    return p.map_terms(rule)


def caputo_l1(samples, h, alpha, t_index):
    """L1 quadrature for the Caputo derivative at grid node ``t_index``.

    ``samples`` holds function values on the uniform grid 0, h, 2h, ...;
    the error is O(h**(2-alpha)) for twice-differentiable integrands.  This
    is the validation oracle for :func:`caputo_monomial`, not a production
    path.
    """
    _check_order(alpha)
    if not h > 0.0:
        raise DomainError(f"grid spacing must be positive, got {h}")
    g = np.asarray(samples, dtype=float)
    n = int(t_index)
    if n < 2:
        raise DomainError(f"need at least 2 grid points before t_index, got {n}")
    if g.ndim != 1 or g.size <= n:
        raise DomainError(
            f"samples must cover indices 0..{n}, got {g.size} values"
        )
    k = np.arange(n, dtype=float)
    weights = (k + 1.0) ** (1.0 - alpha) - k ** (1.0 - alpha)
    increments = g[n - np.arange(n)] - g[n - 1 - np.arange(n)]
    return float(np.dot(weights, increments)) * h ** (-alpha) * rgamma(2.0 - alpha)


def rl_from_caputo(caputo_value, g0, t, alpha):
    """Riemann-Liouville value from the Caputo one:
    RL = Caputo + t**(-alpha) * g(0) / Gamma(1 - alpha).
    """
    _check_order(alpha)
    if not t > 0.0:
        raise DomainError(f"t must be positive, got {t}")
    return caputo_value + g0 * t ** (-alpha) * rgamma(1.0 - alpha)
