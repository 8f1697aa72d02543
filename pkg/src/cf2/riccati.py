"""Convergents with quotients in {a, b, a+b} and their differential identities.

For any quotient sequence over {a, b, a+b} (non-constant polynomials in t),
the combination F_n = ab(a+b) P_n Q_n + ab(P_n^2 + Q_n^2) built from the
convergents differs from ab by a perfect square; consequently the Riccati
residual (ab(a+b) f_n)' + (ab)'(1 + f_n^2) collapses to (a'b + ab')/Q_n^2,
whose 1/t-valuation grows with n.  The module also decides membership in
the class of continued fractions with all partial quotients of degree one,
via the equivalent differential / even-square characterizations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .gf2poly import UniPoly
from .laurent import LaurentSeries


class PatternError(ValueError):
    """Quotient pattern violates the hypotheses."""


@dataclass(frozen=True)
class QuotientSeq:
    """Quotient pattern over {a, b, a+b}; tags 'a', 'b', 'c' (c = a+b)."""

    pattern: tuple[str, ...]
    a: UniPoly
    b: UniPoly

    def __post_init__(self):
        if self.a.is_constant() or self.b.is_constant():
            raise PatternError("a and b must be non-constant")
        if self.a == self.b:
            raise PatternError("a and b must differ")
        bad = set(self.pattern) - {"a", "b", "c"}
        if bad:
            raise PatternError(f"unknown tags {sorted(bad)}")
        if "c" in self.pattern and (self.a + self.b).is_constant():
            raise PatternError("a+b must be non-constant when used as a quotient")

    @classmethod
    def parse(cls, pattern: str, a: str, b: str) -> "QuotientSeq":
        return cls(tuple(pattern), UniPoly.parse(a), UniPoly.parse(b))

    def quotient(self, i: int) -> UniPoly:
        tag = self.pattern[i]
        if tag == "a":
            return self.a
        if tag == "b":
            return self.b
        return self.a + self.b


@dataclass(frozen=True)
class RiccatiWitness:
    """F_n = ab + g_n^2 together with the residual's 1/t-valuation."""

    n: int
    f_n: UniPoly
    g_n: UniPoly
    residual_valuation: Union[int, float, None]


class SquareInvariantError(RuntimeError):
    """F_n + ab failed to be a perfect square (must never happen)."""


def convergents_uni(q: QuotientSeq, n: int) -> tuple[UniPoly, UniPoly]:
    """(P_n, Q_n) by the three-term recurrence from (1, 0) and (u_0, 1)."""
    if n < -1:
        raise ValueError("n must be at least -1")
    if n >= len(q.pattern):
        raise ValueError("pattern too short")
    p_prev, q_prev = UniPoly.one(), UniPoly.zero()
    if n == -1:
        return p_prev, q_prev
    p_cur, q_cur = q.quotient(0), UniPoly.one()
    for i in range(1, n + 1):
        u = q.quotient(i)
        p_cur, p_prev = u * p_cur + p_prev, p_cur
        q_cur, q_prev = u * q_cur + q_prev, q_cur
    return p_cur, q_cur


def _fn_poly(q: QuotientSeq, p: UniPoly, qq: UniPoly) -> UniPoly:
    ab = q.a * q.b
    return ab * (q.a + q.b) * p * qq + ab * (p * p + qq * qq)


def riccati_residual(q: QuotientSeq, n: int) -> Union[int, float]:
    """1/t-valuation of (ab(a+b) f_n)' + (ab)'(1 + f_n^2), f_n = P_n/Q_n.

    Computed exactly as a rational function: the numerator over Q_n^2 is
    F_n' by the quotient rule (squares have zero derivative in char 2).
    """
    p, qq = convergents_uni(q, n)
    if not qq:
        raise ValueError("Q_n is zero")
    ab = q.a * q.b
    s = q.a + q.b
    num = (
        (ab * s * p).derivative() * qq
        + ab * s * p * qq.derivative()
        + ab.derivative() * (p * p + qq * qq)
    )
    if not num:
        return math.inf
    return 2 * qq.degree() - num.degree()


def fn_witness(q: QuotientSeq, n: int) -> RiccatiWitness:
    """Witness g_n with F_n = ab + g_n^2; fails loudly if there is none."""
    p, qq = convergents_uni(q, n)
    f_n = _fn_poly(q, p, qq)
    root = (f_n + q.a * q.b).sqrt()
    if root is None:
        raise SquareInvariantError(f"F_{n} + ab is not a square for {q}")
    val = riccati_residual(q, n) if qq else None
    return RiccatiWitness(n, f_n, root, val)


def baum_sweet_check(alpha: LaurentSeries, prec: int) -> bool:
    """Membership test for all-degree-one partial quotients.

    Checks that (alpha * t(t+1))' + alpha^2 + 1 vanishes below prec, and
    cross-checks the equivalent formulation that (alpha^2 + t alpha + 1)
    divided by (1 + t) is an even square from the maximal-ideal part; the
    two must agree, so the conjunction is returned.
    """
    if alpha.bits and alpha.valuation() < 1:
        raise ValueError("alpha must have only negative t-exponents")
    t_poly = UniPoly.parse("t^2 + t")
    one = LaurentSeries.from_unipoly(UniPoly.one())
    residual = (
        alpha.mul_poly(t_poly).derivative()
        + alpha.square()
        + one.truncated(alpha.prec)
    )
    residual = residual.truncated(prec)
    form1 = residual.is_zero()

    t_series = LaurentSeries.from_unipoly(UniPoly.t())
    num = alpha.square() + t_series * alpha + one.truncated(alpha.prec)
    quot = num * LaurentSeries.from_unipoly(UniPoly.parse("t + 1")).inverse(prec + 2)
    quot = quot.truncated(prec)
    form2 = all(e >= 2 and e % 2 == 0 for e in quot.support())
    return form1 and form2
