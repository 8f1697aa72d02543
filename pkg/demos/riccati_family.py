"""Walkthrough: quotients in {a, b, a+b} and the Riccati differential identity.

Whatever pattern over {a, b, a+b} one picks, the convergent combination
F_n = ab(a+b) P_n Q_n + ab(P_n^2 + Q_n^2) stays a perfect square away from
ab, which forces the Riccati residual down to (ab)'/Q_n^2.  The classical
degree-one families are the special case a = t, b = t + 1; membership in
the all-degree-one class is decided by a differential identity.
"""

from cf2 import QuotientSeq, UniPoly, baum_sweet_check, cf_value, fn_witness

q = QuotientSeq.parse("abcabcab", "t", "t^2 + t + 1")
print("quotients over {a, b, a+b} with a = t, b = t^2 + t + 1")
print(f"{'n':>3} {'deg F_n':>8} {'g_n':>26} {'residual val':>13}")
for n in range(-1, 8):
    w = fn_witness(q, n)
    print(f"{w.n:>3} {w.f_n.degree():>8} {str(w.g_n):>26} "
          f"{str(w.residual_valuation):>13}")

print()
print("every F_n equals ab + g_n^2; the residual valuation grows with n,")
print("so the limit continued fraction solves the Riccati equation exactly.")

print()
alpha = cf_value([UniPoly.zero(), UniPoly.t()], tail_period=1, precision=160)
print("alpha = [0; t, t, t, ...] =", str(alpha)[:46], "...")
print("all partial quotients degree one?", baum_sweet_check(alpha, 128))

beta = cf_value(
    [UniPoly.zero(), UniPoly.t(), UniPoly.parse("t^2"), UniPoly.t()],
    tail_period=1,
    precision=160,
)
print("beta  = [0; t, t^2, t, t, ...] head", str(beta)[:34], "...")
print("all partial quotients degree one?", baum_sweet_check(beta, 128))
