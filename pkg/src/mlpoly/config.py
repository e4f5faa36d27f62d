"""Numeric defaults, kept in one place.

Every tolerance or budget the library consults at run time lives here as a
module-level name.  :func:`configure` and :func:`load_config_file` mutate
them (used by the command-line interface); library functions also accept
explicit keyword overrides where it matters.
"""

from .errors import DomainError

# Series evaluation -----------------------------------------------------------

#: Target absolute/relative tolerance for truncated series evaluators.
SERIES_TOL = 1e-12

#: Hard cap on the number of series terms before giving up.
TERM_BUDGET = 400

#: An evaluation is rejected as dishonest when its error estimate exceeds
#: HONESTY_FACTOR * max(tol*|value|, tol).  The slack absorbs the rounding
#: floor of mildly alternating sums while still refusing results whose
#: cancellation noise dwarfs the requested tolerance.
HONESTY_FACTOR = 100.0

# Contract tolerances for the gamma kernel ------------------------------------

LN_GAMMA_RTOL = 1e-13
RGAMMA_RTOL = 1e-12

# Generalized polynomials ------------------------------------------------------

#: Coefficients with magnitude strictly below this are dropped when a
#: FracPoly is normalized.  0.0 keeps everything except exact zeros.
DROP_TOL = 0.0

#: Two exponents within this absolute distance are considered equal when
#: merging FracPoly terms or aligning coefficient tables.
EXP_SNAP = 1e-9

# Identity / residual checks ---------------------------------------------------

IDENTITY_RTOL = 1e-9
IDENTITY_ATOL = 1e-12
RESIDUAL_TOL = 1e-10


_MUTABLE = {
    "SERIES_TOL": float,
    "TERM_BUDGET": int,
    "HONESTY_FACTOR": float,
    "DROP_TOL": float,
    "EXP_SNAP": float,
    "IDENTITY_RTOL": float,
    "IDENTITY_ATOL": float,
    "RESIDUAL_TOL": float,
}


def configure(**kwargs):
    """Override configuration values by name (lower- or upper-case keys)."""
    for key, value in kwargs.items():
        name = key.upper()
        if name not in _MUTABLE:
            raise DomainError(f"unknown configuration key: {key!r}")
        globals()[name] = _MUTABLE[name](value)


def load_config_file(path):
    """Load ``key = value`` lines (TOML-style scalars, '#' comments) from *path*."""
    overrides = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise DomainError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
            key, _, value = line.partition("=")
            overrides[key.strip()] = value.strip()
    configure(**overrides)
    return overrides
