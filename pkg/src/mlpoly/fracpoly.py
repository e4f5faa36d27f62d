"""Generalized polynomials: finite sums  sum_i c_i * x**mu_i  with real mu_i >= 0.

One carrier type serves ordinary polynomials, the fractional Hermite and
Mittag-Leffler polynomials, and truncated power series with fractional
exponents.  Terms are kept sorted by strictly increasing exponent; exponents
closer than ``config.EXP_SNAP`` are merged (fractional exponents arrive from
float arithmetic along different routes, e.g. ``a*r - a`` versus
``a*(r-1)``), and coefficients below the configured drop tolerance are
removed.
"""

import json
import math

from . import config
from .errors import DomainError


class FracPoly:
    """Immutable generalized polynomial in one variable."""

    __slots__ = ("_terms",)

    def __init__(self, terms=(), drop_tol=None, snap=None):
        drop = config.DROP_TOL if drop_tol is None else float(drop_tol)
        snap = config.EXP_SNAP if snap is None else float(snap)
        merged = []  # sorted (exponent, coefficient) pairs
        for coeff, exponent in sorted(terms, key=lambda t: t[1]):
            coeff = float(coeff)
            exponent = float(exponent)
            if not (math.isfinite(coeff) and math.isfinite(exponent)):
                raise DomainError(f"non-finite term ({coeff}, {exponent})")
            if abs(exponent) <= snap:
                exponent = 0.0
            if exponent < 0.0:
                raise DomainError(f"negative exponent {exponent} not representable")
            if merged and abs(exponent - merged[-1][0]) <= snap:
                merged[-1][1] += coeff
            else:
                merged.append([exponent, coeff])
        self._terms = tuple(
            (c, mu) for mu, c in merged if c != 0.0 and abs(c) >= drop
        )

    # -- construction helpers --------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls([(1.0, 0.0)])

    @classmethod
    def monomial(cls, coeff, exponent):
        return cls([(coeff, exponent)])

    # -- inspection --------------------------------------------------------

    @property
    def terms(self):
        """Tuple of (coefficient, exponent), exponents strictly increasing."""
        return self._terms

    @property
    def exponents(self):
        return tuple(mu for _, mu in self._terms)

    @property
    def coefficients(self):
        return tuple(c for c, _ in self._terms)

    def is_zero(self):
        return not self._terms

    def degree(self):
        """Largest exponent, or None for the zero polynomial."""
        return self._terms[-1][1] if self._terms else None

    def has_integer_exponents(self, tol=1e-9):
        return all(abs(mu - round(mu)) <= tol for _, mu in self._terms)

    def coeff_at(self, exponent, snap=None):
        snap = config.EXP_SNAP if snap is None else snap
        for c, mu in self._terms:
            if abs(mu - exponent) <= snap:
                return c
        return 0.0

    # -- algebra -----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, FracPoly):
            return NotImplemented
        return FracPoly(list(self._terms) + list(other._terms))

    def __sub__(self, other):
        if not isinstance(other, FracPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return FracPoly([(-c, mu) for c, mu in self._terms])

    def scale(self, factor):
        factor = float(factor)
        if factor == 0.0:
            return FracPoly()
        return FracPoly([(factor * c, mu) for c, mu in self._terms])

    __mul__ = scale
    __rmul__ = scale

    def times_x(self):
        """Multiply by the variable (shift every exponent by one)."""
        return FracPoly([(c, mu + 1.0) for c, mu in self._terms])

    def map_terms(self, fn):
        """Apply ``fn(coeff, exponent) -> (coeff, exponent) | None`` term-wise."""
        out = []
        for c, mu in self._terms:
            image = fn(c, mu)
            if image is not None:
                out.append(image)
        return FracPoly(out)

    def derivative(self):
        """Term-wise d/dx; constants vanish.

        Exponents in (0, 1) would leave the representable domain and raise.
        """
        out = []
        for c, mu in self._terms:
            if mu == 0.0:
                continue
            if mu < 1.0 and abs(mu - 1.0) > config.EXP_SNAP:
                raise DomainError(
                    f"derivative of x**{mu} has a negative exponent"
                )
            out.append((c * mu, mu - 1.0))
        return FracPoly(out)

    # -- evaluation ----------------------------------------------------------

    def __call__(self, x):
        x = float(x)
        total = 0.0
        for c, mu in self._terms:
            if x < 0.0 and abs(mu - round(mu)) > 1e-9:
                raise DomainError(
                    f"x**{mu} is not real for x = {x} < 0"
                )
            if x < 0.0:
                total += c * (x ** int(round(mu)))
            else:
                total += c * math.pow(x, mu)
        return total

    # -- comparison / serialization -------------------------------------------

    def max_coeff_diff(self, other):
        """Largest |coefficient difference| across the union of exponents."""
        diff = self - other
        return max((abs(c) for c, _ in diff._terms), default=0.0)

    def to_json_obj(self):
        return [{"c": c, "mu": mu} for c, mu in self._terms]

    def to_json(self):
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj):
        return cls([(item["c"], item["mu"]) for item in obj])

    @classmethod
    def from_json(cls, text):
        return cls.from_json_obj(json.loads(text))

    def __eq__(self, other):
        return isinstance(other, FracPoly) and self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __repr__(self):
        if not self._terms:
            return "FracPoly(0)"
        body = " + ".join(f"{c:.6g}*x^{mu:g}" for c, mu in self._terms)
        return f"FracPoly({body})"
