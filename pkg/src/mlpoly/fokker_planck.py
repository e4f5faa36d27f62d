"""Closed-form solutions of four fractional Cauchy problems.

Time-fractional diffusion (Caputo derivative of order alpha in t):

    D_t^alpha F = k d^2/dx^2 F,      F(x, 0) = f(x)

whose polynomial solutions are fractional Hermite polynomials evaluated at
y = k t**alpha.  Cases (by initial datum): a monomial x**n or a power
series (solve_tf_diffusion), a classical Hermite polynomial H_n(x, a)
(solve_case_i), and a fractional Hermite polynomial (solve_case_ii).

Laguerre-type evolution, with K = CaputoD_x^alpha . x d/dx:

    D_t^beta G = -(b/alpha) K G,     G(x, 0) = g(x)

solved for the scaled monomial datum (-x**alpha)**n/Gamma(1+alpha*n) via
subordination moments (solve_laguerre_monomial) and for a Wright-function
datum, where the solution factorizes (solve_laguerre_wright).

The residual_* operations substitute a solution back into its equation as a
bivariate coefficient table in (x, t), so the check is algebraic: no grids,
no discretization error.  Residuals are reported coefficient-wise,
normalized by the local coefficient magnitude, since the raw entries grow
like n!.
"""

import io
import json
import math
from dataclasses import dataclass, field

from . import config
from .caputo import caputo_monomial
from .errors import DomainError, VerificationError
from .fracpoly import FracPoly
from .fractional_hermite import (
    convolution_identity_i_rhs,
    convolution_identity_ii_rhs,
    fhp_eval,
    fhp_oplus_eval,
)
from .gamma_core import levy_subordination_moment, rgamma
from .mittag_leffler import ml_one, wright


# -- initial data ---------------------------------------------------------------


@dataclass(frozen=True)
class MonomialInitial:
    """f(x) = x**n."""
    n: int


@dataclass(frozen=True)
class HermiteInitial:
    """f(x) = H_n(x, a), the classical two-variable Hermite polynomial."""
    n: int
    a: float


@dataclass(frozen=True)
class FhpInitial:
    """f(x) = H[alpha]_n(x, a), a fractional Hermite polynomial."""
    n: int
    a: float


@dataclass(frozen=True)
class SeriesInitial:
    """f(x) = sum_r coeffs[r] * x**r (truncated power series)."""
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))


@dataclass(frozen=True)
class LaguerreMonomialInitial:
    """g(x) = (-x**alpha)**n / Gamma(1 + alpha*n)."""
    n: int


@dataclass(frozen=True)
class WrightInitial:
    """g(x) = W_{alpha,1}(-y * x**alpha)."""
    y: float


@dataclass(frozen=True)
class DiffusionProblem:
    alpha: float
    k: float
    initial: object

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise DomainError(f"alpha must lie in (0, 1), got {self.alpha}")
        if not self.k > 0.0:
            raise DomainError(f"diffusivity k must be positive, got {self.k}")
        if not isinstance(self.initial, (MonomialInitial, HermiteInitial, FhpInitial, SeriesInitial)):
            raise DomainError(f"unsupported initial datum: {self.initial!r}")


@dataclass(frozen=True)
class LaguerreProblem:
    alpha: float
    beta: float
    b: float
    initial: object

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise DomainError(f"alpha must lie in (0, 1), got {self.alpha}")
        if not 0.0 < self.beta <= 1.0:
            raise DomainError(f"beta must lie in (0, 1], got {self.beta}")
        if not self.b > 0.0:
            raise DomainError(f"b must be positive, got {self.b}")
        if not isinstance(self.initial, (LaguerreMonomialInitial, WrightInitial)):
            raise DomainError(f"unsupported initial datum: {self.initial!r}")


@dataclass(frozen=True)
class SolutionProfile:
    """A solution sampled on a strictly increasing grid, plus its provenance."""

    grid: tuple
    values: tuple
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        grid = tuple(float(g) for g in self.grid)
        values = tuple(float(v) for v in self.values)
        if len(grid) != len(values):
            raise DomainError(
                f"grid and values must have equal length, got {len(grid)} vs {len(values)}"
            )
        if any(b <= a for a, b in zip(grid, grid[1:])):
            raise DomainError("grid must be strictly increasing")
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "values", values)

    def to_csv(self, fmt="{:.15g}"):
        out = io.StringIO()
        out.write("grid,value\n")
        for g, v in zip(self.grid, self.values):
            out.write(f"{fmt.format(g)},{fmt.format(v)}\n")
        return out.getvalue()

    def to_json_obj(self):
        return {
            "meta": dict(self.meta),
            "data": {"grid": list(self.grid), "values": list(self.values)},
        }

    def to_json(self):
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json_obj(cls, obj):
        return cls(
            grid=tuple(obj["data"]["grid"]),
            values=tuple(obj["data"]["values"]),
            meta=dict(obj.get("meta", {})),
        )


# -- time-fractional diffusion ----------------------------------------------------


def solve_tf_diffusion(prob, x, t, n_terms=None):
    """Solution of the time-fractional diffusion problem at the point (x, t).

    Series data are summed as sum_r c_r H[alpha]_r(x, k t**alpha) up to
    ``n_terms`` (default: every stored coefficient); monomial data reduce to a
    single fractional Hermite polynomial.  Hermite/fractional-Hermite data
    dispatch to :func:`solve_case_i` / :func:`solve_case_ii`.
    """
    if not t > 0.0:
        raise DomainError(f"t must be positive, got {t}")
    init = prob.initial
    if isinstance(init, MonomialInitial):
        return fhp_eval(init.n, prob.alpha, x, prob.k * t ** prob.alpha)
    if isinstance(init, SeriesInitial):
        last = len(init.coeffs) - 1 if n_terms is None else int(n_terms)
        if not 0 <= last < len(init.coeffs):
            raise DomainError(
                f"truncation {n_terms} outside the stored coefficients (0..{len(init.coeffs) - 1})"
            )
        w = prob.k * t ** prob.alpha
        return sum(
            init.coeffs[r] * fhp_eval(r, prob.alpha, x, w) for r in range(last + 1)
        )
    if isinstance(init, HermiteInitial):
        return solve_case_i(init.n, init.a, prob.alpha, prob.k, x, t)
    return solve_case_ii(init.n, init.a, prob.alpha, prob.k, x, t)


def solve_case_i(n, a, alpha, k, x, t):
    """Diffusion of the classical Hermite datum H_n(x, a):

        n! sum_r a**r H[alpha]_{n-2r}(x, k t**alpha) / (r! (n-2r)!)

    At t = 0 the initial polynomial is recovered.
    """
    if t < 0.0:
        raise DomainError(f"t must be nonnegative, got {t}")
    return convolution_identity_i_rhs(n, x, a, k * t ** alpha, alpha)


def solve_case_ii(n, a, alpha, k, x, t):
    """Diffusion of the fractional Hermite datum H[alpha]_n(x, a).

    Computed along both closed routes — the gamma-weighted convolution and
    the deformed-addition form H[alpha]_n(x, k t**alpha (+)_alpha a) — and the
    two must agree to the identity tolerance (else :class:`VerificationError`).
    """
    if t < 0.0:
        raise DomainError(f"t must be nonnegative, got {t}")
    w = k * t ** alpha
    by_series = convolution_identity_ii_rhs(n, x, a, w, alpha)
    by_oplus = fhp_oplus_eval(n, x, w, a, alpha)
    gap = abs(by_series - by_oplus)
    allowed = max(
        config.IDENTITY_RTOL * max(abs(by_series), abs(by_oplus)),
        config.IDENTITY_ATOL,
    )
    if gap > allowed:
        raise VerificationError(
            f"the two closed forms disagree: |{by_series!r} - {by_oplus!r}| = {gap:.3e}"
        )
    return by_series


# -- Laguerre-type evolution -----------------------------------------------------


def solve_laguerre_monomial(n, alpha, beta, b, x, t):
    """Solution for the scaled monomial datum:

        sum_r (n!/r!) (-x**alpha)**r (b t**beta)**(n-r)
              / (Gamma(1+alpha*r) Gamma(1+beta*(n-r)))

    At beta = 1 this collapses to E^{-n}_{alpha,1}(x**alpha, b*t).
    """
    if n < 0 or int(n) != n:
        raise DomainError(f"n must be a nonnegative integer, got {n}")
    n = int(n)
    if x < 0.0:
        raise DomainError(f"x must be nonnegative, got {x}")
    if not t > 0.0:
        raise DomainError(f"t must be positive, got {t}")
    xa = math.pow(x, alpha)
    u = b * t ** beta
    total = 0.0
    nfact = math.factorial(n)
    for r in range(n + 1):
        total += (
            (nfact // math.factorial(r))
            * (-xa) ** r
            * u ** (n - r)
            * rgamma(1.0 + alpha * r)
            * rgamma(1.0 + beta * (n - r))
        )
    return total


def solve_laguerre_wright(y_param, alpha, beta, b, x, t):
    """Solution for the Wright datum: W_{alpha,1}(-y x**alpha) * E_beta(b y t**beta)."""
    if x < 0.0:
        raise DomainError(f"x must be nonnegative, got {x}")
    if not t > 0.0:
        raise DomainError(f"t must be positive, got {t}")
    xa = math.pow(x, alpha)
    return wright(alpha, 1.0, -y_param * xa).value * ml_one(beta, b * y_param * t ** beta).value


# -- algebraic residuals -----------------------------------------------------------


def _table_residual(lhs_terms, rhs_terms):
    """Max normalized coefficient difference between two bivariate tables.

    Tables are lists of (coeff, x_exp, t_exp); exponent pairs are snapped to
    9 decimals.  Each difference is divided by max(1, |lhs|, |rhs|) so the
    result measures agreement of the algebraic identity, not the raw n!-scale
    coefficient growth.
    """
    def collect(terms):
        table = {}
        for c, xe, te in terms:
            key = (round(xe, 9), round(te, 9))
            table[key] = table.get(key, 0.0) + c
        return table

    lhs = collect(lhs_terms)
    rhs = collect(rhs_terms)
    worst = 0.0
    for key in lhs.keys() | rhs.keys():
        lv = lhs.get(key, 0.0)
        rv = rhs.get(key, 0.0)
        worst = max(worst, abs(lv - rv) / max(1.0, abs(lv), abs(rv)))
    return worst


def residual_tf_diffusion(n, alpha, k, t_exponent_form=True):
    """Substitute F = H[alpha]_n(x, k t**alpha) into the diffusion equation.

    Both sides are expanded into a bivariate coefficient table; the return
    value is the worst normalized coefficient mismatch (0 up to rounding,
    since the identity is algebraic).  With ``t_exponent_form`` the time
    exponents are kept as the fractional multiples alpha*r; otherwise the
    table is labeled by the integer index r (same residual, relabeled keys).
    """
    if n < 0 or int(n) != n:
        raise DomainError(f"n must be a nonnegative integer, got {n}")
    n = int(n)
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")
    if not k > 0.0:
        raise DomainError(f"k must be positive, got {k}")

    def t_exp(r):
        return alpha * r if t_exponent_form else float(r)

    # F term r: n!/(n-2r)! * k**r / Gamma(1+alpha r) * x**(n-2r) * t**(alpha r)
    lhs = []  # Caputo derivative in t kills r = 0
    rhs = []  # k * second x-derivative
    for r in range(n // 2 + 1):
        base = (
            (math.factorial(n) // math.factorial(n - 2 * r))
            * k ** r
            * rgamma(1.0 + alpha * r)
        )
        if r >= 1:
            factor, _ = caputo_monomial(alpha * r, alpha)
            lhs.append((base * factor, float(n - 2 * r), t_exp(r - 1)))
        xe = n - 2 * r
        if xe >= 2:
            rhs.append((base * xe * (xe - 1) * k, float(xe - 2), t_exp(r)))
    return _table_residual(lhs, rhs)


def residual_laguerre(n, alpha, beta, b):
    """Substitute the monomial-datum solution into the Laguerre-type equation.

    Checks D_t^beta G = -(b/alpha) K G coefficient-wise on the bivariate
    table with x-exponents alpha*r and t-exponents beta*(n-r); returns the
    worst normalized mismatch.
    """
    if n < 0 or int(n) != n:
        raise DomainError(f"n must be a nonnegative integer, got {n}")
    n = int(n)
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")
    if not 0.0 < beta < 1.0:
        raise DomainError(f"beta must lie in (0, 1), got {beta}")
    if not b > 0.0:
        raise DomainError(f"b must be positive, got {b}")

    # G term r: n!/r! (-1)**r b**(n-r)/(Gamma(1+alpha r) Gamma(1+beta(n-r)))
    #           * x**(alpha r) * t**(beta (n-r))
    lhs = []
    rhs = []
    nfact = math.factorial(n)
    for r in range(n + 1):
        base = (
            (nfact // math.factorial(r))
            * (-1.0) ** r
            * b ** (n - r)
            * rgamma(1.0 + alpha * r)
            * rgamma(1.0 + beta * (n - r))
        )
        if n - r >= 1:  # Caputo in t kills the t-constant term
            factor, te = caputo_monomial(beta * (n - r), beta)
            lhs.append((base * factor, alpha * r, te))
        if r >= 1:  # K annihilates the x-constant term
            cfac, xe = caputo_monomial(alpha * r, alpha)
            rhs.append((-(b / alpha) * base * (alpha * r) * cfac, xe, beta * (n - r)))
    return _table_residual(lhs, rhs)
