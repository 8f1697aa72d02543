"""Walkthrough: what makes these sequences automatic.

The letter at index n is the seed letter at the 2-adic valuation of n+1,
so occurrence sets of the period letters obey a shift-by-one law and the
set of distinct half-index subsequences (the 2-kernel) is finite.
"""

from cf2 import (
    EpsSpec,
    Constant,
    Shift,
    kernel,
    kernel_sorted,
    positions,
    positions_predicted,
    stream_prefix,
)

spec = EpsSpec.parse("a(bc)")
print("seed:", spec)
print("prefix:", stream_prefix(spec, 40))

print()
print("occurrence sets of the period letters below 40:")
for j, letter in enumerate(spec.period):
    enumerated = positions(spec, letter, 40).indices
    predicted = positions_predicted(spec, j, 40).indices
    print(f"  {letter}: enumerated {enumerated}")
    print(f"     predicted  {predicted}   agree: {enumerated == predicted}")

print()
print("the law: occurrences of the next period letter sit at 2k+1 over the")
print("previous one, and the first letter recovers them all plus the")
print("arithmetic progression (2k+1)*2^l - 1.")

print()
elements = kernel_sorted(kernel(spec))
print(f"2-kernel ({len(elements)} elements):")
for el in elements:
    if isinstance(el, Shift):
        shifted = spec.shifted(el.j)
        print(f"  shift({el.j})    = sequence of seed {shifted}")
    else:
        print(f"  constant({el.letter})")

print()
print("finiteness of this set is exactly 2-automaticity; the even-index")
print("subsequence of each shift is a constant, the odd-index subsequence")
print("is the next shift.")
