"""Cross-product construction for intersecting DFAs.

The product is built on the fly: only tuples reachable from the tuple of
initial states are materialized, numbered in breadth-first discovery order
with symbols explored in alphabet order, so the numbering is deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .automaton import AlphabetMismatchError, Dfa


@dataclass(frozen=True)
class ProductResult:
    """Product DFA plus the map from product state to component state tuple."""

    dfa: Dfa
    tags: tuple[tuple[int, ...], ...]


def product(components: Sequence[Dfa]) -> ProductResult:
    """Intersection product: the result accepts w iff every component accepts w."""
    if not components:
        raise ValueError("product requires at least one component")
    alphabet = components[0].alphabet
    for d in components[1:]:
        if d.alphabet != alphabet:
            raise AlphabetMismatchError(
                f"components must share one alphabet: {d.alphabet.symbols} != {alphabet.symbols}"
            )

    deltas = [d.delta for d in components]
    start = tuple(d.initial for d in components)
    ids: dict[tuple[int, ...], int] = {start: 0}
    tags = [start]
    rows: list[tuple[int, ...]] = []
    queue = deque((start,))
    width = len(alphabet)
    while queue:
        current = queue.popleft()
        row = []
        for sym in range(width):
            target = tuple(delta[q][sym] for delta, q in zip(deltas, current))
            idx = ids.get(target)
            if idx is None:
                idx = ids[target] = len(ids)
                tags.append(target)
                queue.append(target)
            row.append(idx)
        rows.append(tuple(row))

    accepting = frozenset(
        idx
        for idx, tag in enumerate(tags)
        if all(q in d.accepting for d, q in zip(components, tag))
    )
    dfa = Dfa(len(tags), alphabet, 0, accepting, tuple(rows))
    return ProductResult(dfa=dfa, tags=tuple(tags))
