"""Shared test utilities: word enumeration, random DFAs, brute-force oracles."""

from __future__ import annotations

import itertools
from math import gcd
from random import Random

from hypothesis import strategies as st

from minword import BINARY, Alphabet, Dfa, accepts


def words_of_length(num_symbols: int, length: int):
    return itertools.product(range(num_symbols), repeat=length)


def all_words(num_symbols: int, max_len: int):
    """Every word up to max_len, in shortlex order."""
    for length in range(max_len + 1):
        yield from words_of_length(num_symbols, length)


def random_dfa(rng: Random, max_states: int, alphabet: Alphabet = BINARY) -> Dfa:
    n = rng.randint(1, max_states)
    width = len(alphabet)
    delta = tuple(tuple(rng.randrange(n) for _ in range(width)) for _ in range(n))
    accepting = frozenset(q for q in range(n) if rng.random() < 0.5)
    return Dfa(n, alphabet, rng.randrange(n), accepting, delta)


def brute_force_shortest(dfa: Dfa, max_len: int):
    """First accepted word in shortlex order, or None; independent of the BFS."""
    for word in all_words(len(dfa.alphabet), max_len):
        if accepts(dfa, word):
            return word
    return None


def crt_min_length(m: int, n: int) -> int:
    """Smallest length hitting residue m-1 mod m and n-1 mod n (always exists)."""
    lcm = m * n // gcd(m, n)
    for length in range(lcm):
        if length % m == m - 1 and length % n == n - 1:
            return length
    return lcm - 1


@st.composite
def dfas(draw, max_states: int = 5, alphabet: Alphabet = BINARY) -> Dfa:
    n = draw(st.integers(1, max_states))
    width = len(alphabet)
    delta = tuple(
        tuple(draw(st.integers(0, n - 1)) for _ in range(width)) for _ in range(n)
    )
    accepting = frozenset(draw(st.sets(st.integers(0, n - 1))))
    initial = draw(st.integers(0, n - 1))
    return Dfa(n, alphabet, initial, accepting, delta)


binary_words = st.lists(st.integers(0, 1), max_size=12).map(tuple)
