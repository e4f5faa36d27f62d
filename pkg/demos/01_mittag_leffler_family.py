"""Tour of the Mittag-Leffler function family and the relaxation functions.

Run:  python demos/01_mittag_leffler_family.py
"""

import math

from mlpoly import (
    ConvergenceError,
    ml_one,
    ml_three,
    ml_two,
    relaxation_cole_cole,
    relaxation_hn,
    wright,
)

print("=== the one-parameter function generalizes exp ===")
for z in (-1.0, 0.5, 2.0):
    r = ml_one(1.0, z)
    print(f"E_1({z:+.1f}) = {r.value:.12f}   exp({z:+.1f}) = {math.exp(z):.12f}"
          f"   ({r.terms_used} terms)")

print()
print("=== special values picked up along the parameter plane ===")
print(f"E_2(4) = {ml_one(2.0, 4.0).value:.12f}   cosh(2) = {math.cosh(2.0):.12f}")
print(f"E_1,2(1) = {ml_two(1.0, 2.0, 1.0).value:.12f}   e - 1 = {math.e - 1.0:.12f}")
print(f"E_1/2(-1) = {ml_one(0.5, -1.0).value:.12f}   e*erfc(1) = {math.e * math.erfc(1.0):.12f}")
print(f"W_1,1(1) = {wright(1.0, 1.0, 1.0).value:.12f}   (= I_0(2))")

print()
print("=== the negative-integer upper parameter truncates the series ===")
r = ml_three(0.7, 1.0, -2.0, 0.3)
print(f"E^(-2)_0.7,1(0.3) = {r.value:.12f} using {r.terms_used} terms (finite sum)")

print()
print("=== every evaluation reports its accounting ===")
r = ml_one(0.6, -4.0)
print(f"E_0.6(-4) = {r.value:.12f} +/- {r.abs_error_estimate:.1e} ({r.terms_used} terms)")
print("outside the honest double-precision domain the evaluator refuses:")
try:
    ml_one(0.4, -5.0)
except ConvergenceError as exc:
    print(f"  E_0.4(-5) raised: partial={exc.partial:.3e}, estimate={exc.error_estimate:.1e}")

print()
print("=== non-Debye relaxation ===")
print(" t      Debye         Cole-Cole(0.6)   Havriliak-Negami(0.6, 0.8)")
for t in (0.0, 0.25, 0.5, 1.0, 2.0, 4.0):
    debye = relaxation_cole_cole(1.0, 1.0, t)
    cc = relaxation_cole_cole(0.6, 1.0, t)
    hn = relaxation_hn(0.6, 0.8, 1.0, t)
    print(f"{t:4.2f}   {debye:.10f}   {cc:.10f}     {hn:.10f}")
print("(the fractional exponents produce the characteristic slow algebraic tail)")
