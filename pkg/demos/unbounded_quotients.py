"""Walkthrough: an algebraic series whose partial quotients are unbounded.

The fixed point of y -> 1 + y^4/x in GF(2)((1/x)) is algebraic of degree
four, yet its continued-fraction expansion has partial quotients x^c with
exponents growing without bound.  The exponent sequence is nonetheless
2-regular: c_{2n} = 1 and c_{2n+1} = 4 c_n - 1.
"""

from cf2 import cf_expand, unbounded_quotient_series

g = unbounded_quotient_series(1 << 12)
print("series head:", str(g)[:70], "...")

result = cf_expand(g, 17)
print()
print("partial quotients:")
print("  [" + ", ".join(q.str_in("x") for q in result.quotients) + "]")

cs = [next(iter(q.exponents())) for q in result.quotients[1:]]
print()
print("exponent sequence c:", cs)
print("c_{2n}   == 1        :", all(cs[2 * n] == 1 for n in range(len(cs) // 2)))
print("c_{2n+1} == 4 c_n - 1:", all(
    cs[2 * n + 1] == 4 * cs[n] - 1 for n in range((len(cs) - 1) // 2)
))
