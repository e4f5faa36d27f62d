"""Appell/Sheffer machinery for both polynomial families.

An Appell sequence w_n has the exponential generating function
exp(u*lam)/g(lam); its ladder operators are P = D (lowering) and
M = X - (g'/g)(D) (raising), with commutator [P, M] = 1.  Both families here
are Appell: the fractional Hermite polynomials in x (with
A(lam) = E_alpha(y lam**2), g = 1/A), and the Mittag-Leffler polynomials in
y (with A(lam) = W_{alpha,beta}(-lam x)).

Because only the Appell case B(lam) = lam occurs, the generic auxiliary
functions of the exponentiated first-order operator collapse: q(x) = 1,
T(lam, x) = lam + x, and only v and h carry content:

    v(x) = A'(x-1)/A(x-1),      h(lam, x) = A(lam+x-1)/A(x-1).

On polynomials the operator series g'(D)/g(D) truncates at the degree, so
the raising operator is realized as a finite differential sum.
"""

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SingularityError
from .fracpoly import FracPoly
from .gamma_core import rgamma
from .mittag_leffler import ml_one, ml_two, wright

# The reciprocal/division recurrences and the raising operator sum are
# ill-conditioned when the underlying series has a nearby zero (coefficients
# grow geometrically and the low-order output coefficients emerge from large
# cancellations).  Internal accumulation in extended precision keeps the
# returned doubles correctly rounded; the public types stay float.
_LD = np.longdouble


@dataclass(frozen=True)
class PowerSeries:
    """Truncated formal power series: coeffs[r] multiplies lam**r."""

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(float(c) for c in self.coeffs)
        if len(coeffs) < 2:
            raise DomainError("a PowerSeries needs order >= 1 (at least 2 coefficients)")
        if not all(math.isfinite(c) for c in coeffs):
            raise DomainError("coefficients must be finite")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __call__(self, lam):
        total = 0.0
        for c in reversed(self.coeffs):
            total = total * lam + c
        return total

    def derivative(self):
        return PowerSeries(tuple(r * self.coeffs[r] for r in range(1, len(self.coeffs))))

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        out = [0.0] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            for j in range(n + 1 - i):
                out[i + j] += a * other.coeffs[j]
        return PowerSeries(tuple(out))

    def to_json_obj(self):
        return list(self.coeffs)

    def to_json(self):
        return json.dumps(self.to_json_obj())


def series_reciprocal(s):
    """Multiplicative inverse: (s * result) = 1 + O(lam**(N+1)).

    Requires a nonzero constant term.
    """
    if s.coeffs[0] == 0.0:
        raise DomainError("series with zero constant term has no reciprocal")
    a = np.asarray(s.coeffs, dtype=_LD)
    out = np.zeros_like(a)
    out[0] = 1.0 / a[0]
    for r in range(1, a.size):
        out[r] = -np.dot(a[1 : r + 1], out[r - 1 :: -1]) / a[0]
    return PowerSeries(tuple(float(v) for v in out))


def series_log_derivative(s):
    """Logarithmic derivative s'/s as a series of order N-1."""
    if s.coeffs[0] == 0.0:
        raise DomainError("series with zero constant term has no logarithmic derivative")
    a = np.asarray(s.coeffs, dtype=_LD)
    d = a[1:] * np.arange(1, a.size, dtype=_LD)
    out = np.zeros(d.size, dtype=_LD)
    for r in range(d.size):
        k = min(r, a.size - 1)
        acc = d[r] - np.dot(a[1 : k + 1], out[r - k : r][::-1]) if r else d[r]
        out[r] = acc / a[0]
    coeffs = [float(v) for v in out]
    if len(coeffs) == 1:
        coeffs.append(0.0)  # keep a valid series when N-1 would be order 0
    return PowerSeries(tuple(coeffs))


def appell_A_fhp(alpha, y, n_order):
    """EGF prefactor of the fractional Hermite family: A(lam) = E_alpha(y lam**2).

    Even coefficients y**r / Gamma(1+alpha*r); odd coefficients vanish.
    """
    if not alpha > 0.0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    if n_order < 2:
        raise DomainError(f"order must be >= 2, got {n_order}")
    coeffs = [0.0] * (int(n_order) + 1)
    for r in range(0, int(n_order) // 2 + 1):
        coeffs[2 * r] = y ** r * rgamma(1.0 + alpha * r)
    return PowerSeries(tuple(coeffs))


def appell_A_mlp(alpha, beta, x, n_order):
    """EGF prefactor of the Mittag-Leffler family: A(lam) = W_{alpha,beta}(-lam x)."""
    if not alpha > 0.0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    if not beta > 0.0:
        raise DomainError(f"beta must be positive, got {beta}")
    if n_order < 1:
        raise DomainError(f"order must be >= 1, got {n_order}")
    n_order = max(int(n_order), 2)
    coeffs = tuple(
        (-x) ** r * rgamma(beta + alpha * r) / math.factorial(r)
        for r in range(n_order + 1)
    )
    return PowerSeries(coeffs)


def appell_auxiliary(a_fn, a_prime_fn, lam, x):
    """Generic auxiliary functions of the exponentiated operator, Appell case.

    Given callables for A and A', returns (q, v, T, h) with q = 1 and
    T = lam + x holding identically, v = A'(x-1)/A(x-1), and
    h = A(lam+x-1)/A(x-1).
    """
    den = a_fn(x - 1.0)
    if den == 0.0:
        raise SingularityError(f"A({x - 1.0}) = 0: auxiliary functions undefined")
    return 1.0, a_prime_fn(x - 1.0) / den, lam + x, a_fn(lam + x - 1.0) / den


def aux_v_h_fhp(lam, x, alpha, y):
    """Auxiliary pair (v, h) for the fractional Hermite family:

        v = 2/(alpha*(x-1)) * E_{alpha,0}[y(x-1)**2] / E_alpha[y(x-1)**2]
        h = E_alpha[y(lam+x-1)**2] / E_alpha[y(x-1)**2]

    x = 1 is a pole of the prefactor and raises.
    """
    if not alpha > 0.0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    if x == 1.0:
        raise SingularityError("v has a pole at x = 1")
    s = x - 1.0
    den = ml_one(alpha, y * s * s).value
    if den == 0.0:
        raise SingularityError("E_alpha[y(x-1)**2] = 0: denominators vanish")
    v = 2.0 / (alpha * s) * ml_two(alpha, 0.0, y * s * s).value / den
    h = ml_one(alpha, y * (lam + s) ** 2).value / den
    return v, h


def aux_v_h_mlp(lam, y, alpha, beta, x):
    """Auxiliary pair (v, h) for the Mittag-Leffler family:

        v = -x * W_{alpha,beta+alpha}[-x(y-1)] / W_{alpha,beta}[-x(y-1)]
        h = W_{alpha,beta}[-x(lam+y-1)] / W_{alpha,beta}[-x(y-1)]
    """
    if not alpha > 0.0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    if not beta > 0.0:
        raise DomainError(f"beta must be positive, got {beta}")
    den = wright(alpha, beta, -x * (y - 1.0)).value
    if den == 0.0:
        raise SingularityError("W_{alpha,beta}[-x(y-1)] = 0: denominators vanish")
    v = -x * wright(alpha, beta + alpha, -x * (y - 1.0)).value / den
    h = wright(alpha, beta, -x * (lam + y - 1.0)).value / den
    return v, h


def _require_integer_exponents(p):
    if not p.has_integer_exponents():
        raise DomainError(
            f"operation requires integer exponents, got {p.exponents}"
        )


def lowering_apply(p):
    """Lowering ladder operator P = D: term-wise derivative on integer exponents."""
    _require_integer_exponents(p)
    return p.derivative()


def raising_apply(p, log_deriv_g):
    """Raising ladder operator M = X - (g'/g)(D) on a polynomial.

    ``log_deriv_g`` supplies the coefficients c_k of g'/g; the operator sum
    sum_k c_k D**k truncates at deg(p), so the series must carry at least
    deg(p)+1 coefficients.
    """
    _require_integer_exponents(p)
    deg = p.degree()
    deg = 0 if deg is None else int(round(deg))
    if len(log_deriv_g.coeffs) < deg + 1:
        raise DomainError(
            f"series order {log_deriv_g.order} is insufficient for degree {deg}"
        )
    dense = np.zeros(deg + 2, dtype=_LD)
    for c, mu in p.terms:
        dense[int(round(mu))] = c
    result = np.zeros(deg + 2, dtype=_LD)
    result[1:] = dense[:-1]  # x * p
    work = dense.copy()
    for k in range(deg + 1):
        result -= _LD(log_deriv_g.coeffs[k]) * work
        work[:-1] = work[1:] * np.arange(1, deg + 2, dtype=_LD)  # d/dx
        work[-1] = 0.0
        if not work.any():
            break
    return FracPoly([(float(c), float(j)) for j, c in enumerate(result)])
