"""Walkthrough: the seed (aabb), where the power-series degree halves twice.

A period of length four gives a continued fraction of algebraic degree
2^4 = 16.  The naive bound for the power series would be 2^3 = 8, but the
search finds a relation already at degree 4: the continued-fraction degree
is not always twice the power-series degree.
"""

import time

from cf2 import (
    EpsSpec,
    compute_F,
    compute_F0,
    compute_G,
    compute_inv_cf,
    find_relation,
    minimal_degree_report,
    stream_prefix,
)

spec = EpsSpec.parse("(aabb)")

print("seed:", spec)
print("first 20 letters:", stream_prefix(spec, 20))
print("reciprocal continued fraction =", compute_inv_cf(spec, 64))
print("F0 =", compute_F0(spec, 20))

print()
print("searching for the degree-16 relation on the tail sum ...")
t0 = time.monotonic()
g = compute_G(spec, 2 * 512 + 24)
rels = find_relation(g, max_ydeg=16, coeff_deg_bound=16, prec=512)
print(f"  ({time.monotonic() - t0:.1f}s)")
rel = rels[0]
for j, c in rel.coeffs.items():
    print(f"  c_{j} = {c}")

print()
print("power series: minimal degree within (cap 8, coeff deg 4, z-deg 8):")
F = compute_F(spec, 2 * 256 + 16)
deg, frel = minimal_degree_report(F, 8, 4, 8, prec=256)
print(f"  degree {deg} (not 8):")
for j, c in frel.coeffs.items():
    print(f"  c_{j} = {c}")
