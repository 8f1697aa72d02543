"""Walkthrough: the period-doubling sequence and its quartic continued fraction.

The seed (ab) repeated forever generates the period-doubling sequence via
the word tower W_{n+1} = W_n, eps_n, W_n.  Reading the letters as partial
quotients gives a continued fraction whose reciprocal is an explicit sum
of inverse monomials, and a degree-4 algebraic relation falls out of a
small linear search.
"""

from cf2 import (
    EpsSpec,
    build_word,
    compute_F,
    compute_G,
    compute_Gn,
    compute_inv_cf,
    find_relation,
    stream_prefix,
    verify_relation,
)

spec = EpsSpec.parse("(ab)")

print("seed:", spec)
print("first 16 letters:", stream_prefix(spec, 16))
for n in range(1, 5):
    print(f"W_{n} =", build_word(spec, n))

print()
print("reciprocal of the continued fraction (depth < 64):")
print(" ", compute_inv_cf(spec, 64))

print()
print("tail pieces grouped by residue class mod 2:")
print("  G_0 =", compute_Gn(spec, 0, 64))
print("  G_1 =", compute_Gn(spec, 1, 64))

print()
print("searching for a relation of degree <= 4 on the tail sum G ...")
g = compute_G(spec, 2 * 256 + 16)
rels = find_relation(g, max_ydeg=4, coeff_deg_bound=3, prec=256)
print("  found:", rels[0].inline_str())
report = verify_relation(rels[0], compute_G(spec, 128))
print("  re-verified:", report)

print()
print("the generating power series F = sum s_j z^j is only quadratic:")
F = compute_F(spec, 2 * 256 + 16)
frel = find_relation(F, max_ydeg=2, coeff_deg_bound=3, z_deg_bound=3, prec=256)
print(" ", frel[0].inline_str())
