"""Truncated power series in z with GF(2) letter-polynomial coefficients.

A series of precision P stores exactly its first P coefficients, each a
polynomial in the alphabet letters (never in z).  This module builds the
generating series of a doubling-word sequence, the rational part carried
by the preperiod, the occurrence-indicator series of the period letters,
and the two halving (Cartier) operators.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .gf2poly import Gf2Poly
from .seqcore import EpsSpec, letter_at, positions_predicted

_ZERO = Gf2Poly.zero()
_ONE = Gf2Poly.one()


class ZSeries:
    """Coefficient list of length == precision."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Gf2Poly]):
        self.coeffs = tuple(coeffs)

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    @classmethod
    def zero(cls, precision: int) -> "ZSeries":
        return cls([_ZERO] * precision)

    @classmethod
    def one(cls, precision: int) -> "ZSeries":
        return cls([_ONE] + [_ZERO] * (precision - 1))

    @classmethod
    def indicator(cls, indices: Iterable[int], precision: int) -> "ZSeries":
        coeffs = [_ZERO] * precision
        for i in indices:
            if 0 <= i < precision:
                coeffs[i] = coeffs[i] + _ONE
        return cls(coeffs)

    def order(self) -> Optional[int]:
        """Index of the first nonzero coefficient, or None below precision."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def __bool__(self) -> bool:
        return self.order() is not None

    def __eq__(self, other) -> bool:
        return isinstance(other, ZSeries) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def truncated(self, precision: int) -> "ZSeries":
        if precision >= self.precision:
            return self
        return ZSeries(self.coeffs[:precision])

    def agrees_with(self, other: "ZSeries") -> bool:
        """Equality on the overlap of the two precisions."""
        p = min(self.precision, other.precision)
        return self.coeffs[:p] == other.coeffs[:p]

    def __add__(self, other: "ZSeries") -> "ZSeries":
        p = min(self.precision, other.precision)
        return ZSeries(a + b for a, b in zip(self.coeffs[:p], other.coeffs[:p]))

    __sub__ = __add__

    def __mul__(self, other: "ZSeries") -> "ZSeries":
        p = min(self.precision, other.precision)
        out = [_ZERO] * p
        for i, a in enumerate(self.coeffs[:p]):
            if not a:
                continue
            for j, b in enumerate(other.coeffs[: p - i]):
                if b:
                    out[i + j] = out[i + j] + a * b
        return ZSeries(out)

    def mul_poly(self, c: Gf2Poly) -> "ZSeries":
        """Multiply by a letter polynomial (coefficient-wise)."""
        return ZSeries(a * c for a in self.coeffs)

    def mul_zpow(self, e: int, precision: Optional[int] = None) -> "ZSeries":
        """Multiply by z**e; default output keeps every known coefficient."""
        p = self.precision + e if precision is None else precision
        out = [_ZERO] * p
        for i, a in enumerate(self.coeffs):
            if i + e < p:
                out[i + e] = a
        return ZSeries(out)

    def pow2k(self, k: int, precision: Optional[int] = None) -> "ZSeries":
        """Frobenius power: coefficients squared 2**k-fold, exponents spread."""
        if k == 0:
            return self if precision is None else self.truncated(precision)
        f = 1 << k
        p = self.precision * f if precision is None else precision
        out = [_ZERO] * p
        for i, a in enumerate(self.coeffs):
            if a and i * f < p:
                out[i * f] = a.pow2k(k)
        return ZSeries(out)

    def power(self, j: int, precision: Optional[int] = None) -> "ZSeries":
        p = self.precision if precision is None else precision
        if j < 0:
            raise ValueError("negative power")
        if j == 0:
            return ZSeries.one(p)
        result: Optional[ZSeries] = None
        k = 0
        while j:
            if j & 1:
                f = self.pow2k(k, min(p, self.precision << k))
                result = f if result is None else result * f
            j >>= 1
            k += 1
        return result.truncated(p)

    def cartier(self, r: int) -> "ZSeries":
        """Halving operator: coefficient j of the output is coefficient 2j+r."""
        if r not in (0, 1):
            raise ValueError("r must be 0 or 1")
        return ZSeries(self.coeffs[r::2])

    def sorted_pieces(self) -> list[tuple[int, Gf2Poly]]:
        return [(i, c) for i, c in enumerate(self.coeffs) if c]

    def __str__(self) -> str:
        parts = []
        for i, c in self.sorted_pieces():
            zp = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if i == 0:
                parts.append(str(c))
            elif c == _ONE:
                parts.append(zp)
            elif len(c.terms) == 1:
                parts.append(f"{c}*{zp}")
            else:
                parts.append(f"({c})*{zp}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(z^{self.precision})"

    def __repr__(self) -> str:
        return f"ZSeries({self})"

    def to_json(self) -> dict:
        return {
            "coeffs": [[i, c.to_json()] for i, c in self.sorted_pieces()],
            "precision": self.precision,
        }


def compute_F(spec: EpsSpec, precision: int) -> ZSeries:
    """Generating series of the sequence letters: sum_j s_j z^j."""
    if precision < 1:
        raise ValueError("precision must be at least 1")
    return ZSeries(
        Gf2Poly.variable(letter_at(spec, j)) for j in range(precision)
    )


def compute_R(spec: EpsSpec, precision: int) -> ZSeries:
    """Rational part carried by the preperiod.

    Expansion of (sum_{k<2^l-1} s_k z^k) / (1 + z^{2^l}); zero when the
    preperiod is empty.
    """
    step = 1 << spec.l
    head = [Gf2Poly.variable(letter_at(spec, k)) for k in range(step - 1)]
    coeffs = []
    for i in range(precision):
        r = i % step
        coeffs.append(head[r] if r < step - 1 else _ZERO)
    return ZSeries(coeffs)


def _relabeled(spec: EpsSpec) -> EpsSpec:
    """Same shape with fresh pairwise-distinct letters (role bookkeeping)."""
    n = spec.l + spec.d
    if n > 25:
        raise ValueError("too many seed letters to relabel distinctly")
    letters = [chr(ord("a") + i) for i in range(n)]
    return EpsSpec(
        "".join(letters[: spec.l]), "".join(letters[spec.l :])
    )


def role_positions(spec: EpsSpec, j: int, horizon: int):
    """Occurrences of the j-th *period slot* (not letter), any seed.

    Computed on a distinctly relabeled seed of the same shape, so repeated
    letters in the actual seed do not conflate slots.
    """
    return positions_predicted(_relabeled(spec), j, horizon)


def compute_Fn(spec: EpsSpec, n: int, precision: int) -> ZSeries:
    """Indicator series of the n-th period slot's occurrence set."""
    return ZSeries.indicator(
        role_positions(spec, n, precision).indices, precision
    )


def compute_F0(spec: EpsSpec, precision: int) -> ZSeries:
    """Indicator series of the first period slot's occurrence set."""
    return compute_Fn(spec, 0, precision)


def cartier_z(s: ZSeries, r: int) -> ZSeries:
    return s.cartier(r)


def poly_to_zseries(c: Gf2Poly, precision: int) -> ZSeries:
    """Split a polynomial in letters and z into a coefficient list."""
    coeffs = [_ZERO] * precision
    for m in c.terms:
        e = 0
        letters = []
        for v, k in m:
            if v == "z":
                e = k
            else:
                letters.append((v, k))
        if e < precision:
            coeffs[e] = coeffs[e] + Gf2Poly.monomial(tuple(letters))
    return ZSeries(coeffs)


def eval_relation_z(rel, s: ZSeries) -> ZSeries:
    """Residual of sum_j c_j(z, letters) * s**j, truncated to s's precision."""
    p = s.precision
    residual = ZSeries.zero(p)
    for j, c in rel.coeffs.items():
        residual = residual + poly_to_zseries(c, p) * s.power(j, p)
    return residual
