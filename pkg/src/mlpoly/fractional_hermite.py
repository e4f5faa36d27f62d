"""Fractional Hermite polynomials in two variables.

The family is the two-variable Hermite sum with the inner factorial replaced
by Gamma(1 + alpha*r):

    H[alpha]_n(x, y) = n! * sum_{r=0..n//2} x**(n-2r) y**r / ((n-2r)! Gamma(1+alpha*r))

At alpha = 1 this is the classical heat-polynomial family.  The module also
provides the deformed binomial power (x (+)_alpha y)**n built from the
fractional binomial, the umbral shift of a Hermite initial datum, and both
convolution identities that the diffusion solver relies on.  Integer ratios
like n!/(n-2r)! are taken in exact integer arithmetic before converting to
float, so coefficients are correct to the last unit even at n = 15.
"""

import math

from .errors import DomainError
from .fracpoly import FracPoly
from .gamma_core import frac_binom, rgamma


def _check_n(n):
    if n < 0 or int(n) != n:
        raise DomainError(f"n must be a nonnegative integer, got {n}")
    return int(n)


def _check_alpha_closed(alpha):
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")


def _check_alpha_open(alpha):
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")


def _fhp_term_coeff(n, r, alpha, y):
    # n! / (n-2r)! is an exact integer; only the gamma factor is inexact.
    ratio = math.factorial(n) // math.factorial(n - 2 * r)
    return ratio * (y ** r) * rgamma(1.0 + alpha * r)


def fhp_coeffs(n, alpha, y):
    """Coefficient form of H[alpha]_n(., y) as a :class:`FracPoly` in x.

    Degree n, one monomial per r = 0..n//2, leading coefficient 1.
    """
    n = _check_n(n)
    _check_alpha_closed(alpha)
    return FracPoly(
        [(_fhp_term_coeff(n, r, alpha, y), float(n - 2 * r)) for r in range(n // 2 + 1)]
    )


def fhp_eval(n, alpha, x, y):
    """Value of H[alpha]_n(x, y) by the direct finite sum."""
    n = _check_n(n)
    _check_alpha_closed(alpha)
    total = 0.0
    for r in range(n // 2 + 1):
        total += _fhp_term_coeff(n, r, alpha, y) * x ** (n - 2 * r)
    return total


def fhp_at_zero(n, alpha, y):
    """H[alpha]_n(0, y): zero for odd n, n! y**(n/2) / Gamma(1+alpha*n/2) for even n.

    Parity is decided on the integer n, never through floating trigonometry.
    """
    n = _check_n(n)
    _check_alpha_closed(alpha)
    if n % 2:
        return 0.0
    half = n // 2
    return math.factorial(n) * (y ** half) * rgamma(1.0 + alpha * half)


def oplus_power(x, y, n, alpha):
    """Deformed binomial power (x (+)_alpha y)**n = sum_r C_alpha(n, r) x**(n-r) y**r.

    C_alpha is the fractional binomial; alpha = 1 recovers (x + y)**n and the
    power is homogeneous: (a*x (+)_alpha a*y)**n = a**n (x (+)_alpha y)**n.
    """
    n = _check_n(n)
    _check_alpha_closed(alpha)
    total = 0.0
    for r in range(n + 1):
        total += frac_binom(n, r, alpha) * x ** (n - r) * y ** r
    return total


def umbral_hermite_shift(n, x, a, w, alpha):
    """Hermite polynomial with umbrally shifted second argument.

    Evaluates H_n(x, a + w*d) under the Levy-moment realization of the shift
    operator d, which turns the formal expression into the double sum

        n! sum_r x**(n-2r)/((n-2r)! r!) *
               sum_k C(r,k) a**k w**(r-k) (r-k)!/Gamma(1+alpha(r-k)).

    w = 0 recovers the classical H_n(x, a); a = 0 recovers fhp_eval(n, alpha, x, w).
    """
    n = _check_n(n)
    _check_alpha_open(alpha)
    total = 0.0
    nfact = math.factorial(n)
    for r in range(n // 2 + 1):
        inner = 0.0
        for k in range(r + 1):
            inner += (
                math.comb(r, k)
                * a ** k
                * w ** (r - k)
                * math.factorial(r - k)
                * rgamma(1.0 + alpha * (r - k))
            )
        ratio = nfact // (math.factorial(n - 2 * r) * math.factorial(r))
        total += ratio * x ** (n - 2 * r) * inner
    return total


def convolution_identity_i_rhs(n, x, a, w, alpha):
    """Convolution form of the Hermite-initial-datum solution:

        n! sum_r a**r H[alpha]_{n-2r}(x, w) / (r! (n-2r)!)

    Equal to :func:`umbral_hermite_shift` for alpha in (0, 1); at alpha = 1 it
    collapses to the classical addition H_n(x, a + w).
    """
    n = _check_n(n)
    _check_alpha_closed(alpha)
    total = 0.0
    nfact = math.factorial(n)
    for r in range(n // 2 + 1):
        ratio = nfact // (math.factorial(r) * math.factorial(n - 2 * r))
        total += ratio * a ** r * fhp_eval(n - 2 * r, alpha, x, w)
    return total


def convolution_identity_ii_rhs(n, x, a, w, alpha):
    """Convolution form with gamma weights:

        n! sum_r H[alpha]_{n-2r}(x, w) a**r / ((n-2r)! Gamma(1+alpha*r))

    Equal to H[alpha]_n(x, w (+)_alpha a), cf. :func:`fhp_oplus_eval`.
    """
    n = _check_n(n)
    _check_alpha_closed(alpha)
    total = 0.0
    nfact = math.factorial(n)
    for r in range(n // 2 + 1):
        ratio = nfact // math.factorial(n - 2 * r)
        total += ratio * rgamma(1.0 + alpha * r) * a ** r * fhp_eval(n - 2 * r, alpha, x, w)
    return total


def fhp_oplus_eval(n, x, w, a, alpha):
    """H[alpha]_n(x, w (+)_alpha a): the second argument's powers are expanded
    through the deformed binomial before being inserted into the defining sum.
    """
    n = _check_n(n)
    _check_alpha_closed(alpha)
    total = 0.0
    nfact = math.factorial(n)
    for r in range(n // 2 + 1):
        ratio = nfact // math.factorial(n - 2 * r)
        total += (
            ratio
            * rgamma(1.0 + alpha * r)
            * x ** (n - 2 * r)
            * oplus_power(w, a, r, alpha)
        )
    return total
