"""Laurent series in 1/t over GF(2) and continued-fraction expansion.

A series is stored as a valuation v (the 1/t-exponent of the leading
term, negative for honest polynomials), an int bitset whose bit i is the
coefficient of t**-(v+i), and a precision: 1/t-exponents below the
precision are exact.  Exactly known series (embedded polynomials, finite
continued fractions handled symbolically) carry infinite precision.
"""

from __future__ import annotations

import math
from typing import Iterable, NamedTuple, Optional

from .gf2poly import UniPoly
from .invseries import InvSeries



def _even_bit_mask(n: int) -> int:
    n += n % 2
    return ((1 << n) - 1) // 3  # bits 0, 2, 4, ...


class LaurentSeries:
    """Bit i is the coefficient of t**-(val+i); leading bit 1 unless zero."""

    __slots__ = ("val", "bits", "prec")

    def __init__(self, val: int, bits: int, prec=math.inf):
        if bits:
            shift = (bits & -bits).bit_length() - 1
            bits >>= shift
            val += shift
            if prec != math.inf:
                keep = prec - val
                bits = bits & ((1 << keep) - 1) if keep > 0 else 0
        if not bits:
            val = 0
        self.val = val
        self.bits = bits
        self.prec = prec

    @classmethod
    def zero(cls, prec=math.inf) -> "LaurentSeries":
        return cls(0, 0, prec)

    @classmethod
    def from_unipoly(cls, p: UniPoly, prec=math.inf) -> "LaurentSeries":
        if not p:
            return cls.zero(prec)
        d = p.degree()
        # t^e has 1/t-exponent -e; reverse the bit order around degree d
        bits = 0
        for e in p.exponents():
            bits |= 1 << (d - e)
        return cls(-d, bits, prec)

    @classmethod
    def from_exponents(cls, exps: Iterable[int], prec=math.inf) -> "LaurentSeries":
        """Series sum t**-e over the given 1/t-exponents."""
        exps = sorted(set(exps))
        if not exps:
            return cls.zero(prec)
        v = exps[0]
        bits = 0
        for e in exps:
            bits |= 1 << (e - v)
        return cls(v, bits, prec)

    def is_zero(self) -> bool:
        return self.bits == 0

    def valuation(self):
        """1/t-exponent of the leading term; +inf when zero below precision."""
        return self.val if self.bits else math.inf

    def support(self) -> list[int]:
        """Stored 1/t-exponents, ascending."""
        out = []
        bits = self.bits
        i = 0
        while bits:
            if bits & 1:
                out.append(self.val + i)
            bits >>= 1
            i += 1
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentSeries)
            and self.val == other.val
            and self.bits == other.bits
            and self.prec == other.prec
        )

    def __hash__(self):
        return hash((self.val, self.bits, self.prec))

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        prec = min(self.prec, other.prec)
        if self.bits == 0:
            return LaurentSeries(other.val, other.bits, prec)
        if other.bits == 0:
            return LaurentSeries(self.val, self.bits, prec)
        v = min(self.val, other.val)
        bits = (self.bits << (self.val - v)) ^ (other.bits << (other.val - v))
        return LaurentSeries(v, bits, prec)

    __sub__ = __add__

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        prec = min(
            self.prec + other.valuation(), other.prec + self.valuation()
        )
        if math.isnan(prec):
            prec = math.inf
        if self.bits == 0 or other.bits == 0:
            return LaurentSeries.zero(prec)
        bits = (UniPoly(self.bits) * UniPoly(other.bits)).bits
        return LaurentSeries(self.val + other.val, bits, prec)

    def mul_poly(self, p: UniPoly) -> "LaurentSeries":
        return self * LaurentSeries.from_unipoly(p)

    def square(self) -> "LaurentSeries":
        prec = self.prec if self.prec == math.inf else 2 * self.prec
        return LaurentSeries(2 * self.val, UniPoly(self.bits).square().bits, prec)

    def derivative(self) -> "LaurentSeries":
        """Formal d/dt; only odd t-exponents survive in char 2."""
        n = self.bits.bit_length() + 2
        even = _even_bit_mask(n)
        # t-exponent of bit i is -(val + i); it is odd iff val + i is odd
        keep = even << 1 if self.val % 2 == 0 else even
        prec = self.prec if self.prec == math.inf else self.prec + 1
        return LaurentSeries(self.val + 1, self.bits & keep, prec)

    def truncated(self, prec) -> "LaurentSeries":
        return LaurentSeries(self.val, self.bits, min(self.prec, prec))

    def poly_part(self) -> UniPoly:
        """Terms with nonnegative t-exponent (1/t-exponent <= 0)."""
        if self.bits == 0 or self.val > 0:
            return UniPoly.zero()
        acc = 0
        for e in self.support():
            if e <= 0:
                acc |= 1 << (-e)
        return UniPoly(acc)

    def tail(self) -> "LaurentSeries":
        """Strictly negative-t-exponent part (valuation >= 1)."""
        if self.bits == 0:
            return LaurentSeries.zero(self.prec)
        if self.val >= 1:
            return self
        cut = 1 - self.val  # drop bits 0 .. -val (1/t-exponents <= 0)
        return LaurentSeries(1, self.bits >> cut, self.prec)

    def inverse(self, precision=None) -> "LaurentSeries":
        """Inverse via power-series long division of the unit part."""
        if self.bits == 0:
            raise ZeroDivisionError("zero (at this precision) is not invertible")
        v = self.val
        out_prec = self.prec if self.prec == math.inf else self.prec - 2 * v
        if precision is not None:
            out_prec = min(out_prec, precision)
        if out_prec == math.inf:
            if self.bits == 1:
                return LaurentSeries(-v, 1, math.inf)
            raise ValueError("inverse of a non-monomial needs a finite precision")
        length = out_prec - (-v)  # number of output coefficients
        if length <= 0:
            return LaurentSeries.zero(out_prec)
        b = self.bits
        res = 0
        rem = 1
        for i in range(length):
            if rem & 1:
                res |= 1 << i
                rem ^= b
            rem >>= 1
        return LaurentSeries(-v, res, out_prec)

    def __str__(self) -> str:
        return self.str_in("t")

    def str_in(self, var: str) -> str:
        parts = []
        for e in self.support():
            if e == 0:
                parts.append("1")
            elif e == -1:
                parts.append(var)
            else:
                parts.append(f"{var}^{-e}")
        body = " + ".join(parts) if parts else "0"
        if self.prec == math.inf:
            return body
        return f"{body} + O({var}^{-self.prec})"

    def __repr__(self) -> str:
        return f"LaurentSeries({self})"


class CfExpansion(NamedTuple):
    quotients: tuple[UniPoly, ...]
    status: str  # 'count' | 'rational' | 'exhausted'


def cf_expand(s: LaurentSeries, count: int) -> CfExpansion:
    """Continued-fraction expansion: split off polynomial parts, invert tails.

    Stops after `count` quotients, or earlier when the remainder vanishes:
    'rational' if it is exactly zero (infinite precision), 'exhausted' if
    it is merely zero below the known precision.
    """
    quots: list[UniPoly] = []
    cur = s
    while len(quots) < count:
        if cur.is_zero():
            return CfExpansion(
                tuple(quots),
                "rational" if cur.prec == math.inf else "exhausted",
            )
        if cur.prec != math.inf and cur.prec <= max(cur.val, 0):
            return CfExpansion(tuple(quots), "exhausted")
        quots.append(cur.poly_part())
        r = cur.tail()
        if r.is_zero():
            return CfExpansion(
                tuple(quots),
                "rational" if r.prec == math.inf else "exhausted",
            )
        cur = r.inverse()
    return CfExpansion(tuple(quots), "count")


def cf_value(
    quotients: list[UniPoly], tail_period: int = 0, precision: int = 64
) -> LaurentSeries:
    """Laurent value of a continued fraction given by polynomial quotients.

    With tail_period = k > 0, the final k quotients repeat forever; the
    periodic tail value is found by iterating its self-map to precision.
    """
    if tail_period < 0 or tail_period > len(quotients):
        raise ValueError("bad tail period")
    head = list(quotients[: len(quotients) - tail_period])
    tail = list(quotients[len(quotients) - tail_period :])
    for q in tail:
        if q.degree() < 1:
            raise ValueError("periodic tail quotients must be non-constant")
    # evaluate with enough working precision that the head folds survive
    work = precision + 2 * sum(max(q.degree(), 0) for q in quotients) + 4

    def fold(value: Optional[LaurentSeries], qs) -> LaurentSeries:
        for q in reversed(qs):
            lead = LaurentSeries.from_unipoly(q, math.inf if value is None else work)
            value = lead if value is None else lead + value.inverse(work)
        return value

    if tail:
        x = fold(None, tail)
        prev = None
        while prev is None or not _agree(prev, x, work):
            prev = x
            x = fold(x, tail)
        value = x
    else:
        value = None
    value = fold(value, head)
    if value is None:
        raise ValueError("empty continued fraction")
    return value.truncated(precision if tail else math.inf)


def _agree(a: LaurentSeries, b: LaurentSeries, prec: int) -> bool:
    d = a + b
    return d.is_zero() or d.valuation() >= prec


def specialize_inv(
    s: InvSeries, assign: dict[str, UniPoly], precision: int
) -> LaurentSeries:
    """Map alphabet letters to polynomials in t, term by term.

    Every inverse-power term becomes the Laurent expansion of a rational
    function; the images are summed to the requested 1/t precision.
    """
    out = LaurentSeries.zero(min(precision, s.precision))
    for term in s.terms:
        num = UniPoly.one()
        den = UniPoly.one()
        for v, n in term:
            p = assign[v]
            if n >= 0:
                den = den * (p ** n)
            else:
                num = num * (p ** (-n))
        img = LaurentSeries.from_unipoly(num, math.inf)
        if den.degree() > 0 or den.bits != 1:
            img = img * LaurentSeries.from_unipoly(den).inverse(
                precision + max(num.degree(), 0) + 1
            )
        out = out + img.truncated(out.prec)
    return out


def unbounded_quotient_series(precision: int) -> LaurentSeries:
    """The fixed point of y -> 1 + y**4 / t in GF(2)((1/t)).

    Explicitly sum of t**-((4^k - 1)/3) over k >= 0; its partial-quotient
    degrees c satisfy c_{2n} = 1 and c_{2n+1} = 4 c_n - 1, so they are
    unbounded but 2-regular.
    """
    exps = []
    k = 0
    while True:
        e = ((1 << (2 * k)) - 1) // 3
        if e >= precision:
            break
        exps.append(e)
        k += 1
    return LaurentSeries.from_exponents(exps, precision)
