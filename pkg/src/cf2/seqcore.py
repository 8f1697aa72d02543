"""Doubling-word construction of automatic sequences from periodic seeds.

A seed is an ultimately periodic sequence of letters, written ``pre(per)``:
a finite preperiod followed by a forever-repeated period.  The associated
word tower starts from the empty word and doubles around successive seed
letters, W_{n+1} = W_n, eps_n, W_n; its limit is the sequence produced
here.  Every such sequence is 2-automatic, and the n-th letter admits the
closed form eps_{v2(n+1)} with v2 the 2-adic valuation (an implementation
device; it is property-tested against the word recurrence).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

MAX_WORD_LETTERS = 1 << 26

_SPEC_RE = re.compile(r"([a-y]*)\(([a-y]+)\)\Z")


class WordTooLargeError(RuntimeError):
    """Requested word does not fit in memory limits."""


class DistinctLettersError(ValueError):
    """Operation requires all seed letters to be pairwise distinct."""


@dataclass(frozen=True)
class EpsSpec:
    """Ultimately periodic seed: preperiod then an infinitely repeated period."""

    preperiod: str
    period: str

    def __post_init__(self):
        if len(self.period) < 1:
            raise ValueError("period must be nonempty")
        for ch in self.preperiod + self.period:
            if not ("a" <= ch <= "y"):
                raise ValueError(f"letter {ch!r} outside [a-y] (z is reserved)")

    @classmethod
    def parse(cls, text: str) -> "EpsSpec":
        m = _SPEC_RE.match(text.strip())
        if m is None:
            raise ValueError(f"bad seed {text!r}; expected e.g. 'a(bc)' or '(ab)'")
        return cls(m.group(1), m.group(2))

    def __str__(self) -> str:
        return f"{self.preperiod}({self.period})"

    @property
    def l(self) -> int:
        return len(self.preperiod)

    @property
    def d(self) -> int:
        return len(self.period)

    @property
    def alphabet(self) -> str:
        """Letters in first-appearance order; the letter id is its index."""
        seen = []
        for ch in self.preperiod + self.period:
            if ch not in seen:
                seen.append(ch)
        return "".join(seen)

    def letter(self, j: int) -> str:
        """The seed letter eps_j."""
        if j < self.l:
            return self.preperiod[j]
        return self.period[(j - self.l) % self.d]

    def all_distinct(self) -> bool:
        s = self.preperiod + self.period
        return len(set(s)) == len(s)

    def shifted(self, j: int) -> "EpsSpec":
        """The seed of the shifted sequence (eps_{j+k})_k."""
        if j <= self.l:
            return EpsSpec(self.preperiod[j:], self.period)
        r = (j - self.l) % self.d
        return EpsSpec("", self.period[r:] + self.period[:r])

    def canonical(self) -> "EpsSpec":
        """Minimal representation of the same letter sequence.

        Reduces the period to its primitive root, then absorbs preperiod
        letters that merely repeat the rotated period.
        """
        per = self.period
        d = len(per)
        for d0 in range(1, d + 1):
            if d % d0 == 0 and per == per[:d0] * (d // d0):
                per = per[:d0]
                break
        pre = self.preperiod
        while pre and pre[-1] == per[-1]:
            pre = pre[:-1]
            per = per[-1] + per[:-1]
        return EpsSpec(pre, per)


@dataclass(frozen=True)
class PositionSet:
    """Strictly increasing indices below a horizon."""

    horizon: int
    indices: tuple[int, ...]

    def __post_init__(self):
        idx = self.indices
        if any(idx[i] >= idx[i + 1] for i in range(len(idx) - 1)):
            raise ValueError("indices must be strictly increasing")
        if idx and (idx[0] < 0 or idx[-1] >= self.horizon):
            raise ValueError("indices must lie in [0, horizon)")


@dataclass(frozen=True)
class Shift:
    """Kernel element: the sequence generated by the j-fold shifted seed."""

    j: int


@dataclass(frozen=True)
class Constant:
    """Kernel element: a constant sequence."""

    letter: str


KernelElement = Union[Shift, Constant]


def letter_at(spec: EpsSpec, n: int) -> str:
    """n-th letter of the limit sequence: eps at the 2-adic valuation of n+1."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    m = n + 1
    return spec.letter(((m & -m).bit_length() - 1))


def build_word(spec: EpsSpec, n: int) -> str:
    """The n-th doubling word (length 2**n - 1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if (1 << n) - 1 > MAX_WORD_LETTERS:
        raise WordTooLargeError(f"word of length 2^{n}-1 exceeds the size cap")
    w = ""
    for i in range(n):
        w = w + spec.letter(i) + w
    return w


def stream_prefix(spec: EpsSpec, n_letters: int) -> str:
    """First n letters of the limit sequence."""
    if n_letters < 0:
        raise ValueError("length must be nonnegative")
    return "".join(letter_at(spec, n) for n in range(n_letters))


def positions(spec: EpsSpec, letter: str, horizon: int) -> PositionSet:
    """All indices k < horizon with s_k equal to the given letter."""
    idx = tuple(
        n for n in range(horizon) if letter_at(spec, n) == letter
    )
    return PositionSet(horizon, idx)


def _predicted_p0(spec: EpsSpec, horizon: int) -> list[int]:
    """Occurrence set of the first period letter via its recursive law.

    Seeded by direct enumeration on a small window, then grown with
    P_{j+1} = 2 P_j + 1 around the cycle and
    P_0 = (2 P_{d-1} + 1)  union  {(2k+1) * 2^l - 1 : k >= 0}.
    The union's k = 0 element (index 2^l - 1) is required for agreement
    with enumeration.
    """
    l, d = spec.l, spec.d
    e0 = spec.period[0]
    base = max(4 << l, 8)
    p0 = [n for n in range(base) if letter_at(spec, n) == e0]
    hor = base
    while hor < horizon:
        pj = p0
        h = hor
        for _ in range(d - 1):
            pj = [2 * k + 1 for k in pj]
            h = 2 * h + 1
        new_hor = 2 * h + 1
        merged = {2 * k + 1 for k in pj}
        step = 1 << l
        merged.update(range(step - 1, new_hor, 2 * step))
        p0 = sorted(m for m in merged if m < new_hor)
        hor = new_hor
    return [k for k in p0 if k < horizon]


def positions_predicted(spec: EpsSpec, j: int, horizon: int) -> PositionSet:
    """Occurrences of the j-th period letter, from the shift-by-one law.

    Requires all seed letters pairwise distinct (the law's hypothesis).
    """
    if not spec.all_distinct():
        raise DistinctLettersError(f"{spec} has repeated letters")
    if not 0 <= j < spec.d:
        raise ValueError("period index out of range")
    pj = _predicted_p0(spec, horizon)
    for _ in range(j):
        pj = [2 * k + 1 for k in pj]
    return PositionSet(horizon, tuple(k for k in pj if k < horizon))


def _element_key(spec: EpsSpec, el: KernelElement):
    if isinstance(el, Constant):
        return ("const", el.letter)
    canon = spec.shifted(el.j).canonical()
    if canon.l == 0 and canon.d == 1:
        return ("const", canon.period)
    return ("shift", canon.preperiod, canon.period)


def kernel(spec: EpsSpec) -> frozenset[KernelElement]:
    """The exact 2-kernel of the limit sequence.

    The even-index subsequence of the shifted-seed sequence is the constant
    eps_j and the odd-index subsequence is the once-more-shifted sequence,
    so closure is a walk over shifts and constants.  Elements are
    identified by the canonical form of their shifted seed, not by prefix
    comparison.
    """
    l, d = spec.l, spec.d
    found: dict[object, KernelElement] = {}
    queue: list[KernelElement] = [Shift(0)]
    while queue:
        el = queue.pop()
        key = _element_key(spec, el)
        if key in found:
            continue
        found[key] = el
        if isinstance(el, Constant):
            continue
        j = el.j
        queue.append(Constant(spec.letter(j)))
        nxt = j + 1
        if nxt > l:
            nxt = l + ((nxt - l) % d)
        queue.append(Shift(nxt))
    return frozenset(found.values())


def kernel_sorted(elements: frozenset[KernelElement]) -> list[KernelElement]:
    """Deterministic listing: shifts by index, then constants by letter."""
    shifts = sorted((e for e in elements if isinstance(e, Shift)), key=lambda e: e.j)
    consts = sorted(
        (e for e in elements if isinstance(e, Constant)), key=lambda e: e.letter
    )
    return [*shifts, *consts]
