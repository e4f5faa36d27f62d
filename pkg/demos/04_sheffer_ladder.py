"""Both polynomial families are Appell sequences: one prefactor series
determines the auxiliary functions and the raising/lowering ladder.

Run:  python demos/04_sheffer_ladder.py
"""

from mlpoly import (
    appell_A_fhp,
    appell_A_mlp,
    aux_v_h_fhp,
    aux_v_h_mlp,
    fhp_coeffs,
    lowering_apply,
    mlp_coeffs,
    raising_apply,
    series_log_derivative,
    series_reciprocal,
)

alpha, y = 0.5, 1.0

print("=== the Hermite-family prefactor A(lam) = E_alpha(y lam**2) ===")
a_series = appell_A_fhp(alpha, y, 8)
print("A coefficients:", [f"{c:.6f}" for c in a_series.coeffs])
g = series_reciprocal(a_series)
print("g = 1/A       :", [f"{c:.6f}" for c in g.coeffs])
gd = series_log_derivative(g)
print("g'/g          :", [f"{c:.6f}" for c in gd.coeffs])

print()
print("=== ladder action on the fractional Hermite family ===")
p3 = fhp_coeffs(3, alpha, y)
print(f"w_3        = {p3}")
print(f"M w_3      = {raising_apply(p3, series_log_derivative(series_reciprocal(appell_A_fhp(alpha, y, 12))))}")
print(f"w_4        = {fhp_coeffs(4, alpha, y)}")
print(f"P w_3      = {lowering_apply(p3)}")
print(f"3 w_2      = {fhp_coeffs(2, alpha, y).scale(3.0)}")

print()
print("=== the commutator [P, M] acts as the identity ===")
gd12 = series_log_derivative(series_reciprocal(appell_A_fhp(alpha, y, 12)))
for n in (2, 5, 8):
    p = fhp_coeffs(n, alpha, y)
    pm = lowering_apply(raising_apply(p, gd12))
    mp_ = raising_apply(lowering_apply(p), gd12)
    gap = (pm - mp_).max_coeff_diff(p)
    print(f"n={n}: max |([P,M] - 1) w_n| coefficient = {gap:.2e}")

print()
print("=== the same machinery drives the Mittag-Leffler family in y ===")
beta, xp = 1.0, 0.5
gd_mlp = series_log_derivative(series_reciprocal(appell_A_mlp(alpha, beta, xp, 12)))
q2 = mlp_coeffs(2, alpha, beta, xp)
print(f"w_2        = {q2}")
print(f"M w_2      = {raising_apply(q2, gd_mlp)}")
print(f"w_3        = {mlp_coeffs(3, alpha, beta, xp)}")

print()
print("=== auxiliary functions of the exponentiated first-order operator ===")
v, h = aux_v_h_fhp(0.2, 1.5, alpha, y)
print(f"Hermite family at (lam=0.2, x=1.5): v = {v:.10f}, h = {h:.10f}")
v, h = aux_v_h_mlp(0.3, 0.5, alpha, beta, xp)
print(f"ML family at (lam=0.3, y=0.5):      v = {v:.10f}, h = {h:.10f}")
print("(q = 1 and T = lam + x hold identically for Appell sequences)")
