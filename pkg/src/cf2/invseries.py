"""Truncated series in inverse powers of the alphabet letters, over GF(2).

A term is a tuple of (variable, n) pairs standing for the product of the
variables raised to the power -n; positive n means an inverse power, so a
polynomial part has negative entries.  The depth of a term is the sum of
its n's, and a series of precision p stores exactly its terms of depth
below p.  The norm of a series with minimal term depth m is 2**-m, which
makes the ring ultrametric; precision is propagated pessimistically
through every operation so that reported terms never change when a
pipeline is re-run at higher precision.
"""

from __future__ import annotations

import math
from typing import Iterable, Optional

from .gf2poly import Gf2Poly, Monomial, parse_terms

InvTerm = tuple  # tuple[tuple[str, int], ...], n != 0, sorted by variable

ONE_TERM: InvTerm = ()


class NotInvertibleError(ValueError):
    """No unique minimal-depth term at the current precision."""


def term_depth(t: InvTerm) -> int:
    return sum(n for _, n in t)


def term_mul(t1: InvTerm, t2: InvTerm) -> InvTerm:
    if not t1:
        return t2
    if not t2:
        return t1
    exps = dict(t1)
    for v, n in t2:
        s = exps.get(v, 0) + n
        if s:
            exps[v] = s
        else:
            del exps[v]
    return tuple(sorted(exps.items()))


def term_neg(t: InvTerm) -> InvTerm:
    return tuple((v, -n) for v, n in t)


def term_pow2k(t: InvTerm, k: int) -> InvTerm:
    return tuple((v, n << k) for v, n in t)


def term_from_monomial(m: Monomial) -> InvTerm:
    """Embed an ordinary monomial (positive powers, depth -degree)."""
    return tuple((v, -e) for v, e in m)


def term_str(t: InvTerm) -> str:
    if not t:
        return "1"
    return "*".join(
        (v if n == -1 else f"{v}^{-n}") for v, n in t
    )


def term_sort_key(t: InvTerm):
    return (term_depth(t), t)


class InvSeries:
    """Finite term set plus a depth precision (terms of depth >= p dropped)."""

    __slots__ = ("terms", "precision")

    def __init__(self, terms: Iterable[InvTerm] = (), precision=math.inf):
        acc: set[InvTerm] = set()
        for t in terms:
            acc.symmetric_difference_update((t,))
        self.terms = frozenset(t for t in acc if term_depth(t) < precision)
        self.precision = precision

    @classmethod
    def _raw(cls, terms: frozenset, precision) -> "InvSeries":
        s = object.__new__(cls)
        s.terms = terms
        s.precision = precision
        return s

    @classmethod
    def zero(cls, precision=math.inf) -> "InvSeries":
        return cls._raw(frozenset(), precision)

    @classmethod
    def one(cls, precision=math.inf) -> "InvSeries":
        return cls((ONE_TERM,), precision)

    @classmethod
    def from_poly(cls, p: Gf2Poly, precision=math.inf) -> "InvSeries":
        """Embed a polynomial in the letters (exactly, by default)."""
        return cls((term_from_monomial(m) for m in p.terms), precision)

    @classmethod
    def parse(cls, text: str, precision=math.inf) -> "InvSeries":
        monos = parse_terms(text, allow_negative=True)
        return cls((tuple((v, -e) for v, e in m) for m in monos), precision)

    def depth_norm(self):
        """Minimal term depth; +inf for (truncated-to-)zero series."""
        if not self.terms:
            return math.inf
        return min(term_depth(t) for t in self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, InvSeries)
            and self.terms == other.terms
            and self.precision == other.precision
        )

    def __hash__(self) -> int:
        return hash((self.terms, self.precision))

    def __add__(self, other: "InvSeries") -> "InvSeries":
        prec = min(self.precision, other.precision)
        terms = self.terms ^ other.terms
        if prec != math.inf:
            terms = frozenset(t for t in terms if term_depth(t) < prec)
        return InvSeries._raw(frozenset(terms), prec)

    __sub__ = __add__

    def __mul__(self, other: "InvSeries") -> "InvSeries":
        prec = min(
            self.precision + other.depth_norm(),
            other.precision + self.depth_norm(),
        )
        if math.isnan(prec):
            prec = math.inf
        acc: set[InvTerm] = set()
        for t1 in self.terms:
            d1 = term_depth(t1)
            for t2 in other.terms:
                if d1 + term_depth(t2) >= prec:
                    continue
                acc.symmetric_difference_update((term_mul(t1, t2),))
        return InvSeries._raw(frozenset(acc), prec)

    def pow2k(self, k: int) -> "InvSeries":
        """Frobenius power 2**k; precision multiplies (char 2)."""
        if k == 0:
            return self
        prec = self.precision * (1 << k)
        return InvSeries._raw(
            frozenset(term_pow2k(t, k) for t in self.terms), prec
        )

    def power(self, j: int) -> "InvSeries":
        if j < 0:
            raise ValueError("negative power")
        if j == 0:
            return InvSeries.one()
        result: Optional[InvSeries] = None
        k = 0
        while j:
            if j & 1:
                f = self.pow2k(k)
                result = f if result is None else result * f
            j >>= 1
            k += 1
        return result

    def div_term(self, t: InvTerm) -> "InvSeries":
        """Exact division by a single term."""
        neg = term_neg(t)
        d = term_depth(t)
        prec = self.precision - d if self.precision != math.inf else math.inf
        return InvSeries._raw(
            frozenset(term_mul(s, neg) for s in self.terms), prec
        )

    def truncated(self, precision) -> "InvSeries":
        prec = min(self.precision, precision)
        return InvSeries._raw(
            frozenset(t for t in self.terms if term_depth(t) < prec), prec
        )

    def inverse(self, precision=None) -> "InvSeries":
        """Multiplicative inverse, via the geometric series of the unit part.

        Requires a unique minimal-depth term m, so that self = m * (1 + r)
        with depth(r) > 0.  Output precision is the input precision less
        twice the depth of m (capped by the explicit argument).
        """
        if not self.terms:
            raise NotInvertibleError("zero (at this precision) is not invertible")
        m_depth = self.depth_norm()
        leading = [t for t in self.terms if term_depth(t) == m_depth]
        if len(leading) > 1:
            raise NotInvertibleError(
                f"no unique minimal-depth term (depth {m_depth})"
            )
        m = leading[0]
        out_prec = (
            math.inf if self.precision == math.inf else self.precision - 2 * m_depth
        )
        if precision is not None:
            out_prec = min(out_prec, precision)
        m_inv = term_neg(m)
        r = [term_mul(t, m_inv) for t in self.terms if t != m]
        if r and out_prec == math.inf:
            raise ValueError("inverse of a non-monomial needs a finite precision")
        # geometric sum 1 + r + r^2 + ... ; S truncated so that m^-1 * S
        # is complete below out_prec
        s_prec = out_prec + m_depth if out_prec != math.inf else math.inf
        acc: set[InvTerm] = {ONE_TERM}
        cur = {t for t in r if term_depth(t) < s_prec}
        while cur:
            acc.symmetric_difference_update(cur)
            nxt: set[InvTerm] = set()
            for t1 in cur:
                d1 = term_depth(t1)
                for t2 in r:
                    if d1 + term_depth(t2) >= s_prec:
                        continue
                    nxt.symmetric_difference_update((term_mul(t1, t2),))
            cur = nxt
        return InvSeries._raw(
            frozenset(term_mul(t, m_inv) for t in acc), out_prec
        )

    def sorted_terms(self) -> list[InvTerm]:
        return sorted(self.terms, key=term_sort_key)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(term_str(t) for t in self.sorted_terms())

    def __repr__(self) -> str:
        prec = self.precision
        return f"InvSeries({self}, precision={prec})"

    def to_json(self) -> dict:
        return {
            "terms": [
                [[[v, n] for v, n in t], term_depth(t)]
                for t in self.sorted_terms()
            ],
            "precision": None if self.precision == math.inf else self.precision,
        }

    @classmethod
    def from_json(cls, data: dict) -> "InvSeries":
        prec = data.get("precision")
        return cls(
            (tuple((str(v), int(n)) for v, n in pairs) for pairs, _ in data["terms"]),
            math.inf if prec is None else prec,
        )


def eval_relation_inv(rel, s: InvSeries) -> InvSeries:
    """Residual of sum_j c_j * s**j with letter-polynomial coefficients."""
    residual = InvSeries.zero()
    for j, c in rel.coeffs.items():
        residual = residual + InvSeries.from_poly(c) * s.power(j)
    return residual
