"""Shortest accepted word via breadth-first search over states.

Returns the lexicographically least word among the shortest: BFS discovers
states in order of (distance, lex-least word reaching them) when successors
are expanded in alphabet order, so the first accepting state discovered
yields the canonical witness.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .automaton import AlphabetMismatchError, Dfa, Word


@dataclass(frozen=True)
class LssResult:
    """Length and canonical witness of the shortest accepted word."""

    length: int
    witness: Word


def shortest_accepted(dfa: Dfa) -> LssResult | None:
    """Shortest accepted word of a DFA, or None when the language is empty."""
    if dfa.initial in dfa.accepting:
        return LssResult(0, ())
    if not dfa.accepting:
        return None
    width = len(dfa.alphabet)
    pred: dict[int, tuple[int, int]] = {dfa.initial: (-1, -1)}
    queue = deque((dfa.initial,))
    while queue:
        state = queue.popleft()
        row = dfa.delta[state]
        for sym in range(width):
            target = row[sym]
            if target in pred:
                continue
            pred[target] = (state, sym)
            if target in dfa.accepting:
                return _reconstruct(pred, dfa.initial, target)
            queue.append(target)
    return None


def _reconstruct(pred: dict[int, tuple[int, int]], start: int, end: int) -> LssResult:
    symbols: list[int] = []
    state = end
    while state != start:
        state, sym = pred[state]
        symbols.append(sym)
    symbols.reverse()
    return LssResult(len(symbols), tuple(symbols))


def intersection_lss(components: Sequence[Dfa]) -> LssResult | None:
    """Shortest word accepted by every component, or None if none exists.

    Behaves exactly like shortest_accepted(product(components).dfa) but walks
    reachable state tuples directly, which keeps exhaustive tuple searches fast.
    """
    if not components:
        raise ValueError("intersection requires at least one component")
    alphabet = components[0].alphabet
    for d in components[1:]:
        if d.alphabet != alphabet:
            raise AlphabetMismatchError(
                f"components must share one alphabet: {d.alphabet.symbols} != {alphabet.symbols}"
            )
    return _intersection_lss_tables(
        [d.delta for d in components],
        [d.accepting for d in components],
        tuple(d.initial for d in components),
        len(alphabet),
    )


def _intersection_lss_tables(
    deltas: Sequence[tuple[tuple[int, ...], ...]],
    acceptings: Sequence[frozenset[int]],
    start: tuple[int, ...],
    width: int,
) -> LssResult | None:
    if all(q in acc for q, acc in zip(start, acceptings)):
        return LssResult(0, ())
    pred: dict[tuple[int, ...], tuple[tuple[int, ...], int]] = {start: (start, -1)}
    queue = deque((start,))
    while queue:
        current = queue.popleft()
        for sym in range(width):
            target = tuple(delta[q][sym] for delta, q in zip(deltas, current))
            if target in pred:
                continue
            pred[target] = (current, sym)
            if all(q in acc for q, acc in zip(target, acceptings)):
                symbols = [sym]
                state = current
                while state != start:
                    state, s = pred[state]
                    symbols.append(s)
                symbols.reverse()
                return LssResult(len(symbols), tuple(symbols))
            queue.append(target)
    return None
