"""Continuant arithmetic, the tail series of a continued fraction, and
discovery/verification of the algebraic relations these series satisfy.

A doubling-word sequence, read as partial quotients, has convergents whose
numerator u_n is always a single monomial; the reciprocal of the continued
fraction is the sum of the 1/u_n.  The tail sum past the preperiod (G) and
its residue-class pieces (G_n) satisfy Frobenius-twisted recursions, which
is what makes a bounded-degree linear search for relations effective: the
finder assembles the GF(2) linear system "sum_j c_j * target^j == 0 below a
depth", solves it with bitset elimination, re-checks every candidate at
(at least) doubled precision, and returns canonical representatives.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Mapping, Optional, Union

from .gf2linalg import nullspace
from .gf2poly import (
    Gf2Poly,
    Monomial,
    ONE_MONO,
    mono_deg,
    mono_mul,
)
from .invseries import (
    InvSeries,
    eval_relation_inv,
    term_depth,
    term_from_monomial,
    term_mul,
)
from .seqcore import EpsSpec
from .zseries import ZSeries, eval_relation_z

DEFAULT_VERIFY_PREC = 64
DEFAULT_FIND_PREC = 256

Series = Union[InvSeries, ZSeries]


@dataclass(frozen=True)
class ContinuantPair:
    """Numerator/denominator pair of the 2^n-1 letter convergent."""

    u: Gf2Poly
    v: Gf2Poly
    n: int


def continuants(spec: EpsSpec, n: int) -> ContinuantPair:
    """Pair built by u_{k+1} = eps_k u_k^2, v_{k+1} = eps_k u_k v_k + 1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    u = Gf2Poly.variable(spec.letter(0))
    v = Gf2Poly.one()
    for k in range(1, n):
        e = Gf2Poly.variable(spec.letter(k))
        u, v = e * u * u, e * u * v + Gf2Poly.one()
    return ContinuantPair(u, v, n)


def continuant_monomial(spec: EpsSpec, n: int) -> Monomial:
    """u_n as a bare monomial: eps_{n-1} eps_{n-2}^2 ... eps_0^{2^{n-1}}.

    n = 0 is the empty product (the convention u_0 = 1).
    """
    exps: dict[str, int] = {}
    for k in range(n):
        for v in exps:
            exps[v] <<= 1
        ch = spec.letter(k)
        exps[ch] = exps.get(ch, 0) + 1
    return tuple(sorted(exps.items()))


def general_continuant(quotients: list[Gf2Poly]) -> tuple[Gf2Poly, Gf2Poly]:
    """Three-term recurrence from (1, 0) and (q_0, 1)."""
    p_prev, q_prev = Gf2Poly.one(), Gf2Poly.zero()
    if not quotients:
        return p_prev, q_prev
    p_cur, q_cur = quotients[0], Gf2Poly.one()
    for u in quotients[1:]:
        p_cur, p_prev = u * p_cur + p_prev, p_cur
        q_cur, q_prev = u * q_cur + q_prev, q_cur
    return p_cur, q_cur


def compute_inv_cf(spec: EpsSpec, precision: int) -> InvSeries:
    """Reciprocal of the continued fraction: sum over n >= 1 of 1/u_n."""
    if precision < 1:
        raise ValueError("precision must be at least 1")
    terms = []
    n = 1
    while (1 << n) - 1 < precision:
        terms.append(continuant_monomial(spec, n))
        n += 1
    return InvSeries(terms, precision)


def compute_cf(spec: EpsSpec, precision: int) -> InvSeries:
    """The continued fraction itself (inverse of the reciprocal sum)."""
    return compute_inv_cf(spec, precision + 2).inverse(precision)


def compute_G(spec: EpsSpec, precision: int) -> InvSeries:
    """Tail sum past the preperiod: sum over n > l of 1/u_n."""
    terms = []
    n = spec.l + 1
    while (1 << n) - 1 < precision:
        terms.append(continuant_monomial(spec, n))
        n += 1
    return InvSeries(terms, precision)


def compute_Gn(spec: EpsSpec, n: int, precision: int) -> InvSeries:
    """Residue-class piece: sum over k >= 0 of 1/u_{l+n+kd} (u_0 = 1)."""
    if not 0 <= n < spec.d:
        raise ValueError("period index out of range")
    terms = []
    idx = spec.l + n
    while (1 << idx) - 1 < precision:
        terms.append(continuant_monomial(spec, idx))
        idx += spec.d
    return InvSeries(terms, precision)


class Relation:
    """Candidate algebraic equation sum_j c_j * y^j = 0.

    Coefficients are letter polynomials (optionally with z); at least one
    must be nonzero.  The canonical form produced by the finder carries no
    common monomial factor.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, Gf2Poly]):
        cleaned = {j: c for j, c in coeffs.items() if c}
        if not cleaned:
            raise ValueError("a relation needs at least one nonzero coefficient")
        if any(j < 0 for j in cleaned):
            raise ValueError("negative powers of the unknown are not allowed")
        self.coeffs = dict(sorted(cleaned.items()))

    @property
    def ydegree(self) -> int:
        return max(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Relation) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(tuple(sorted((j, c.terms) for j, c in self.coeffs.items())))

    def content(self) -> Monomial:
        common: Optional[dict] = None
        for c in self.coeffs.values():
            for m in c.terms:
                d = dict(m)
                if common is None:
                    common = d
                else:
                    common = {v: min(e, d[v]) for v, e in common.items() if v in d}
                if not common:
                    return ONE_MONO
        return tuple(sorted(common.items())) if common else ONE_MONO

    def content_stripped(self) -> "Relation":
        m = self.content()
        if not m:
            return self
        return Relation({j: c.div_monomial(m) for j, c in self.coeffs.items()})

    def max_monomial_degree(self) -> int:
        return max(c.degree() for c in self.coeffs.values())

    def monomial_count(self) -> int:
        return sum(len(c.terms) for c in self.coeffs.values())

    def inline_str(self, unknown: str = "y") -> str:
        parts = []
        for j, c in self.coeffs.items():
            yp = "" if j == 0 else (unknown if j == 1 else f"{unknown}^{j}")
            if j == 0:
                parts.append(f"({c})")
            elif c == Gf2Poly.one():
                parts.append(yp)
            else:
                parts.append(f"({c})*{yp}")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.inline_str()

    def __repr__(self) -> str:
        return f"Relation({self})"

    def to_file_text(self) -> str:
        return "".join(f"deg {j}: {c}\n" for j, c in self.coeffs.items())

    @classmethod
    def from_file_text(cls, text: str) -> "Relation":
        coeffs: dict[int, Gf2Poly] = {}
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            head, _, poly = line.partition(":")
            if not head.startswith("deg") or not poly.strip():
                raise ValueError(f"bad relation line {line!r}")
            j = int(head[3:].strip())
            coeffs[j] = coeffs.get(j, Gf2Poly.zero()) + Gf2Poly.parse(poly.strip())
        return cls(coeffs)

    def to_json(self) -> dict:
        return {"coeffs": [[j, str(c)] for j, c in self.coeffs.items()]}

    @classmethod
    def from_json(cls, data: dict) -> "Relation":
        return cls({int(j): Gf2Poly.parse(c) for j, c in data["coeffs"]})


@dataclass(frozen=True)
class ResidualReport:
    """Outcome of substituting a series into a relation."""

    vanished: bool
    residual_depth: Optional[int]
    precision: float

    def to_json(self) -> dict:
        return {
            "vanished": self.vanished,
            "residual_depth": self.residual_depth,
            "precision": None if self.precision == math.inf else self.precision,
        }


def verify_relation(rel: Relation, target: Series) -> ResidualReport:
    """Substitute the target and report whether the residual vanished."""
    if isinstance(target, InvSeries):
        residual = eval_relation_inv(rel, target)
        if residual.terms:
            return ResidualReport(False, residual.depth_norm(), residual.precision)
        return ResidualReport(True, None, residual.precision)
    residual = eval_relation_z(rel, target)
    order = residual.order()
    return ResidualReport(order is None, order, residual.precision)


def _coeff_monomials(
    letters: list[str], coeff_deg_bound: int, z_deg_bound: Optional[int]
) -> list[Monomial]:
    """Letter monomials of total degree <= bound, times optional z powers."""
    monos: list[Monomial] = []

    def rec(i: int, remaining: int, cur: list):
        if i == len(letters):
            monos.append(tuple(cur))
            return
        rec(i + 1, remaining, cur)
        for e in range(1, remaining + 1):
            cur.append((letters[i], e))
            rec(i + 1, remaining - e, cur)
            cur.pop()

    rec(0, coeff_deg_bound, [])
    if z_deg_bound is not None:
        monos = [
            mono_mul(m, (("z", e),)) if e else m
            for m in monos
            for e in range(z_deg_bound + 1)
        ]
    universe = tuple(sorted(set(letters) | {"z"}))

    def order_key(m: Monomial):
        d = dict(m)
        return (mono_deg(m), tuple(d.get(v, 0) for v in universe))

    return sorted(monos, key=order_key)


class _InvTarget:
    """Row supplier for inverse-power series targets."""

    kind = "inv"

    def __init__(self, target: InvSeries, max_ydeg: int):
        self.powers = [target.power(j) for j in range(max_ydeg + 1)]

    def letters(self) -> list[str]:
        return sorted({v for t in self.powers[1].terms for v, _ in t})

    def base_precision(self):
        return min(p.precision for p in self.powers)

    def support(self, j: int, mon: Monomial, bound) -> list:
        shift = term_from_monomial(mon)
        out = []
        for t in self.powers[j].terms:
            k = term_mul(t, shift)
            if term_depth(k) < bound:
                out.append(k)
        return out

    @staticmethod
    def key_sort(key):
        return (term_depth(key), key)


class _ZTarget:
    """Row supplier for z-power-series targets."""

    kind = "z"

    def __init__(self, target: ZSeries, max_ydeg: int):
        p = target.precision
        self.powers = [target.power(j, p) for j in range(max_ydeg + 1)]
        self.precision = p

    def letters(self) -> list[str]:
        return sorted(
            {
                v
                for c in self.powers[1].coeffs
                for m in c.terms
                for v, _ in m
                if v != "z"
            }
        )

    def base_precision(self):
        return self.precision

    def support(self, j: int, mon: Monomial, bound) -> list:
        e = 0
        letter_part = []
        for v, k in mon:
            if v == "z":
                e = k
            else:
                letter_part.append((v, k))
        lm = tuple(letter_part)
        out = []
        limit = min(bound, self.precision + e)
        for order, c in enumerate(self.powers[j].coeffs):
            if order + e >= limit:
                break
            if not c:
                continue
            for m in c.terms:
                out.append((order + e, mono_mul(m, lm)))
        return out

    @staticmethod
    def key_sort(key):
        return key


def _residual_support(adapter, unknowns, tag: int, bound) -> set:
    keys: set = set()
    i = 0
    t = tag
    while t:
        if t & 1:
            j, mon = unknowns[i]
            keys.symmetric_difference_update(adapter.support(j, mon, bound))
        t >>= 1
        i += 1
    return keys


def _materialize(tag: int, unknowns) -> Relation:
    coeffs: dict[int, set] = {}
    i = 0
    while tag:
        if tag & 1:
            j, mon = unknowns[i]
            coeffs.setdefault(j, set()).symmetric_difference_update((mon,))
        tag >>= 1
        i += 1
    return Relation({j: Gf2Poly(ms) for j, ms in coeffs.items() if ms})


def _rel_identity(rel: Relation) -> tuple:
    return tuple(sorted((j, c.terms) for j, c in rel.coeffs.items()))


def _relation_sort_key(rel: Relation):
    return (rel.max_monomial_degree(), rel.monomial_count(), rel.inline_str())


def find_relation(
    target: Series,
    max_ydeg: int,
    coeff_deg_bound: int,
    z_deg_bound: Optional[int] = None,
    prec: int = DEFAULT_FIND_PREC,
    enumeration_cap: int = 16,
) -> list[Relation]:
    """All bounded-coefficient relations the target satisfies below prec.

    The returned relations are canonical: verified at the target's full
    precision (at least twice `prec` when the target allows), stripped of
    common monomial content, deduplicated, and sorted so that the smallest
    representative (lowest coefficient degree, then fewest monomials) comes
    first.  An empty list means no relation exists within the bounds.
    """
    if max_ydeg < 1:
        raise ValueError("max_ydeg must be at least 1")
    if isinstance(target, ZSeries):
        adapter = _ZTarget(target, max_ydeg)
        if z_deg_bound is None:
            z_deg_bound = coeff_deg_bound
    elif isinstance(target, InvSeries):
        adapter = _InvTarget(target, max_ydeg)
        if z_deg_bound is not None:
            raise ValueError("z-degree bound only applies to z-series targets")
    else:
        raise TypeError(f"cannot search relations for {type(target).__name__}")

    verify_bound = adapter.base_precision() - coeff_deg_bound
    if verify_bound < 2 * prec:
        warnings.warn(
            f"target precision supports verification below {verify_bound}, "
            f"less than twice the solve precision {prec}",
            stacklevel=2,
        )
    p_sys = min(prec, verify_bound)

    mons = _coeff_monomials(adapter.letters(), coeff_deg_bound, z_deg_bound)
    unknowns = [(j, m) for j in range(max_ydeg + 1) for m in mons]

    supports = [adapter.support(j, m, p_sys) for j, m in unknowns]
    all_keys: set = set()
    for sup in supports:
        all_keys.update(sup)
    if len(all_keys) < len(unknowns):
        warnings.warn(
            f"under-determined system: {len(all_keys)} equations for "
            f"{len(unknowns)} unknowns below depth {p_sys}",
            stacklevel=2,
        )
    sorted_keys = sorted(all_keys, key=adapter.key_sort)

    # solve on the shallowest equations first; widen if the solution space
    # stays implausibly large, since the residual pass below is linear in it
    n_eq = min(len(sorted_keys), len(unknowns) + 256)
    while True:
        index = {k: i for i, k in enumerate(sorted_keys[:n_eq])}
        rows = []
        for sup in supports:
            mask = 0
            for k in sup:
                b = index.get(k)
                if b is not None:
                    mask |= 1 << b
            rows.append(mask)
        tags = nullspace(rows, n_eq)
        if len(tags) <= 24 or n_eq == len(sorted_keys):
            break
        n_eq = min(len(sorted_keys), 2 * n_eq)

    if not tags:
        return []

    # impose the remaining equations exactly, at full available precision
    residuals = [
        _residual_support(adapter, unknowns, tag, verify_bound) for tag in tags
    ]
    if any(residuals):
        rkeys = sorted(set().union(*residuals), key=adapter.key_sort)
        ridx = {k: i for i, k in enumerate(rkeys)}
        rows2 = []
        for res in residuals:
            mask = 0
            for k in res:
                mask |= 1 << ridx[k]
            rows2.append(mask)
        combos = nullspace(rows2, len(rkeys))
        final_tags = []
        for combo in combos:
            t = 0
            i = 0
            while combo:
                if combo & 1:
                    t ^= tags[i]
                combo >>= 1
                i += 1
            final_tags.append(t)
    else:
        final_tags = tags

    if not final_tags:
        return []

    basis: dict[tuple, Relation] = {}
    for tag in final_tags:
        rel = _materialize(tag, unknowns).content_stripped()
        basis.setdefault(_rel_identity(rel), rel)

    dim = len(final_tags)
    if len(basis) == 1:
        # every basis vector is a monomial multiple of one generator, so
        # the whole space is {q * generator} and the generator is minimal
        return list(basis.values())
    if dim <= enumeration_cap:
        # the whole space consists of multiples of one minimal relation;
        # sweep it for the representative with smallest coefficients
        best_pair = None
        ties: list[Relation] = []
        cur = 0
        for g in range(1, 1 << dim):
            cur ^= final_tags[(g & -g).bit_length() - 1]
            rel = _materialize(cur, unknowns).content_stripped()
            pair = (rel.max_monomial_degree(), rel.monomial_count())
            if best_pair is None or pair < best_pair:
                best_pair = pair
                ties = [rel]
            elif pair == best_pair:
                ties.append(rel)
        best = min(ties, key=lambda r: r.inline_str())
    else:
        warnings.warn(
            f"nullspace dimension {dim} exceeds the enumeration cap; "
            "the first relation may not be the smallest representative",
            stacklevel=2,
        )
        best = min(basis.values(), key=_relation_sort_key)

    rest = [r for k, r in basis.items() if k != _rel_identity(best)]
    rest.sort(key=_relation_sort_key)
    return [best, *rest]


def minimal_degree_report(
    target: Series,
    ydeg_cap: int,
    coeff_deg_bound: int,
    z_deg_bound: Optional[int] = None,
    prec: int = DEFAULT_FIND_PREC,
) -> tuple[Optional[int], Optional[Relation]]:
    """Smallest y-degree admitting a relation within bounds, with a witness.

    Evidence is a bounded search, not an irreducibility certificate: the
    result means "no relation of smaller degree exists with coefficient
    degree and precision as stated".
    """
    for ydeg in range(1, ydeg_cap + 1):
        rels = find_relation(target, ydeg, coeff_deg_bound, z_deg_bound, prec)
        if rels:
            return ydeg, rels[0]
    return None, None
