"""Shared strategies and brute-force oracles for the test suite."""

from __future__ import annotations

import random

from hypothesis import HealthCheck, settings, strategies as st

from cf2 import EpsSpec, letter_at, stream_prefix

settings.register_profile(
    "thousand",
    max_examples=1000,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.register_profile(
    "default",
    max_examples=100,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("default")


LETTERS = "abcde"


@st.composite
def eps_specs(draw, max_pre=3, max_per=4, n_letters=5):
    alphabet = LETTERS[:n_letters]
    pre = draw(st.text(alphabet=alphabet, min_size=0, max_size=max_pre))
    per = draw(st.text(alphabet=alphabet, min_size=1, max_size=max_per))
    return EpsSpec(pre, per)


@st.composite
def distinct_specs(draw, max_pre=3, max_per=4):
    total = draw(st.integers(min_value=1, max_value=max_pre + max_per))
    l = draw(st.integers(min_value=0, max_value=min(max_pre, total - 1)))
    letters = list("abcdefgh"[:total])
    draw(st.randoms()).shuffle(letters)
    return EpsSpec("".join(letters[:l]), "".join(letters[l:]))


def random_spec(rng: random.Random, max_pre=3, max_per=4, n_letters=5) -> EpsSpec:
    alphabet = LETTERS[:n_letters]
    pre = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, max_pre)))
    per = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, max_per)))
    return EpsSpec(pre, per)


def random_distinct_spec(rng: random.Random, max_pre=3, max_per=4) -> EpsSpec:
    total = rng.randint(1, max_pre + max_per)
    l = rng.randint(0, min(max_pre, total - 1))
    letters = list("abcdefgh"[:total])
    rng.shuffle(letters)
    return EpsSpec("".join(letters[:l]), "".join(letters[l:]))


def kernel_oracle_prefixes(spec: EpsSpec) -> set[tuple]:
    """Distinct subsequence prefixes n -> s(2^e n + r), e up to l+d+1.

    The prefix length 2^(l+d) pins the shifted seed letters, so distinct
    kernel elements give distinct prefixes and the count is exact for
    small seeds.
    """
    depth = spec.l + spec.d
    span = 1 << depth
    source = stream_prefix(spec, (2 << depth) * span)
    seen: set[tuple] = set()
    frontier = [(1, 0)]
    for _ in range(depth + 2):
        nxt = []
        for step, off in frontier:
            prefix = tuple(source[step * n + off] for n in range(span))
            if prefix in seen:
                continue
            seen.add(prefix)
            nxt.append((2 * step, off))
            nxt.append((2 * step, step + off))
        frontier = nxt
    return seen


def element_prefix(spec: EpsSpec, el, n: int) -> tuple:
    """Length-n prefix of a kernel element's sequence."""
    from cf2 import Constant, Shift

    if isinstance(el, Constant):
        return (el.letter,) * n
    shifted = spec.shifted(el.j)
    return tuple(letter_at(shifted, k) for k in range(n))
