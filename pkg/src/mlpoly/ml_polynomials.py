"""Mittag-Leffler polynomials in two variables.

    E^{-n}_{alpha,beta}(x, y) = sum_{r=0..n} C(n,r) (-x)**r y**(n-r) / Gamma(beta+alpha*r)

the finite truncation of the three-parameter Mittag-Leffler series at
negative integer upper parameter.  This module adds the Konhauser
regularization (which reaches the classical Laguerre polynomials at
alpha = beta = 1, y = 1), the closed-form ordinary/exponential generating
functions, and the operational construction: the generator

    K = CaputoD_x^alpha . x d/dx,      K x**g = g * Gamma(1+g)/Gamma(1+g-alpha) * x**(g-alpha)

annihilates constants and lowers exponents by alpha, so the operator
exponential exp(-(y/alpha) K) applied to (-1)**n x**(alpha n)/Gamma(1+alpha n)
truncates exactly after n applications and reproduces the polynomial.
"""

import math

import numpy as np

from . import config
from .caputo import caputo_monomial
from .errors import DomainError, VerificationError
from .fracpoly import FracPoly
from .gamma_core import ln_gamma, rgamma
from .mittag_leffler import ml_two, wright


def _check_n(n):
    if n < 0 or int(n) != n:
        raise DomainError(f"n must be a nonnegative integer, got {n}")
    return int(n)


def _check_pos(value, name):
    if not value > 0.0:
        raise DomainError(f"{name} must be positive, got {value}")


def mlp_eval(n, alpha, beta, x, y):
    """Value of E^{-n}_{alpha,beta}(x, y); the n = 0 polynomial is 1/Gamma(beta)."""
    n = _check_n(n)
    _check_pos(alpha, "alpha")
    _check_pos(beta, "beta")
    total = 0.0
    for r in range(n + 1):
        total += (
            math.comb(n, r)
            * (-x) ** r
            * y ** (n - r)
            * rgamma(beta + alpha * r)
        )
    return total


def mlp_coeffs(n, alpha, beta, x):
    """Coefficient form of E^{-n}_{alpha,beta}(x, .) as a :class:`FracPoly` in y."""
    n = _check_n(n)
    _check_pos(alpha, "alpha")
    _check_pos(beta, "beta")
    return FracPoly(
        [
            (math.comb(n, r) * (-x) ** r * rgamma(beta + alpha * r), float(n - r))
            for r in range(n + 1)
        ]
    )


def mlp_one_var_reduction(n, alpha, beta, x, y):
    """Homogeneity route y**n * E^{-n}_{alpha,beta}(x/y, 1); undefined at y = 0."""
    n = _check_n(n)
    if y == 0.0:
        raise DomainError("one-variable reduction is undefined at y = 0; use mlp_eval")
    return y ** n * mlp_eval(n, alpha, beta, x / y, 1.0)


def konhauser(n, alpha, beta, x, y):
    """Regularized form Gamma(beta+alpha*n) * E^{-n}_{alpha,beta}(x**alpha, y) / n!.

    Equals 1 at n = 0 for every beta; at alpha = beta = 1, y = 1 it is the
    classical Laguerre polynomial L_n(x).
    """
    n = _check_n(n)
    _check_pos(alpha, "alpha")
    _check_pos(beta, "beta")
    integer_alpha = alpha == int(alpha)
    if x < 0.0 and not integer_alpha:
        raise DomainError(f"x**{alpha} is not real for x = {x} < 0")
    xa = x ** int(alpha) if integer_alpha else math.pow(x, alpha)
    return (
        math.exp(ln_gamma(beta + alpha * n))
        * mlp_eval(n, alpha, beta, xa, y)
        / math.factorial(n)
    )


def mlp_ogf_closed(lam, alpha, beta, x, y):
    """Closed ordinary generating function
    sum_n lam**n E^{-n}_{alpha,beta}(x, y) = E_{alpha,beta}(-lam*x/(1-lam*y)) / (1-lam*y),
    valid for |lam*y| < 1.
    """
    _check_pos(alpha, "alpha")
    _check_pos(beta, "beta")
    if abs(lam * y) >= 1.0:
        raise DomainError(f"|lambda*y| must be < 1, got {abs(lam * y)}")
    return ml_two(alpha, beta, -lam * x / (1.0 - lam * y)).value / (1.0 - lam * y)


def mlp_egf_closed(lam, alpha, beta, x, y):
    """Closed exponential generating function
    sum_n lam**n/n! E^{-n}_{alpha,beta}(x, y) = exp(lam*y) * W_{alpha,beta}(-lam*x).
    """
    _check_pos(alpha, "alpha")
    _check_pos(beta, "beta")
    return math.exp(lam * y) * wright(alpha, beta, -lam * x).value


def frac_laguerre_apply(p, alpha):
    """One application of the generator K = CaputoD^alpha . x d/dx on a FracPoly.

    Term-wise: x**g -> g * Gamma(1+g)/Gamma(1+g-alpha) * x**(g-alpha);
    constants are annihilated (x d/dx kills them before the Caputo step).
    Exponents in (0, alpha) would go negative and raise.
    """
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")

    def rule(c, mu):
        if mu == 0.0:
            return None
        factor, nu = caputo_monomial(mu, alpha)
        return c * mu * factor, nu

    return p.map_terms(rule)


def mlp_operational_check(n, alpha, y, n_terms, x_grid=None):
    """Compare the polynomial against its operator-exponential construction.

    Returns ``(lhs, rhs)`` sampled on ``x_grid`` (default: 41 points on
    [0, 2]), where lhs = E^{-n}_{alpha,1}(x**alpha, y) and rhs applies the
    truncated exponential of -(y/alpha) K to (-1)**n x**(alpha n)/Gamma(1+alpha n).
    The truncation is exact once n_terms >= n, and the two grids must agree
    to ``config.RESIDUAL_TOL`` or a :class:`VerificationError` is raised.
    """
    n = _check_n(n)
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")
    if n_terms < n:
        raise DomainError(f"n_terms must be >= n, got {n_terms} < {n}")
    grid = np.linspace(0.0, 2.0, 41) if x_grid is None else np.asarray(x_grid, dtype=float)
    if np.any(grid < 0.0):
        raise DomainError("x grid must be nonnegative for real x**alpha")

    seed = FracPoly.monomial((-1.0) ** n * rgamma(1.0 + alpha * n), alpha * n)
    acc = seed
    power = seed
    weight = 1.0
    for r in range(1, int(n_terms) + 1):
        power = frac_laguerre_apply(power, alpha)
        if power.is_zero():
            break
        weight *= (-y / alpha) / r
        acc = acc + power.scale(weight)

    lhs = np.array([mlp_eval(n, alpha, 1.0, xi ** alpha, y) for xi in grid])
    rhs = np.array([acc(xi) for xi in grid])
    worst = float(np.max(np.abs(lhs - rhs))) if grid.size else 0.0
    if worst > config.RESIDUAL_TOL:
        raise VerificationError(
            f"operational construction disagrees with the polynomial: "
            f"max |lhs-rhs| = {worst:.3e}"
        )
    return lhs, rhs
