"""Walkthrough: a seed with a preperiod, a(bc), and both of its relations.

The preperiod contributes a rational part to the generating series and a
leading 1/a term to the reciprocal continued fraction; the period of
length two drives a quartic relation for the continued fraction but only
a quadratic one for the power series.
"""

from cf2 import (
    EpsSpec,
    compute_cf,
    compute_F,
    compute_F0,
    compute_G,
    compute_R,
    compute_inv_cf,
    find_relation,
    minimal_degree_report,
    stream_prefix,
)

spec = EpsSpec.parse("a(bc)")

print("seed:", spec, " preperiod length", spec.l, " period length", spec.d)
print("first 20 letters:", stream_prefix(spec, 20))

print()
print("reciprocal continued fraction =", compute_inv_cf(spec, 40))
print("tail sum G =", compute_G(spec, 40))

print()
print("power series side:")
print("  F  =", compute_F(spec, 12))
print("  R  =", compute_R(spec, 12), " (rational part from the preperiod)")
print("  F0 =", compute_F0(spec, 24))

print()
print("quartic relation for the continued fraction itself:")
cf = compute_cf(spec, 2 * 256 + 16)
rels = find_relation(cf, max_ydeg=4, coeff_deg_bound=6, prec=256)
print(" ", rels[0].inline_str())

print()
print("minimal degree for F within (ydeg <= 4, coeff deg <= 3, z-deg <= 8):")
F = compute_F(spec, 2 * 256 + 16)
deg, rel = minimal_degree_report(F, 4, 3, 8, prec=256)
print(f"  degree {deg}:", rel.inline_str())
