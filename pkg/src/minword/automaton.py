"""Complete deterministic finite automata over a fixed ordered alphabet.

States are dense integer indices 0..state_count-1, the transition table is a
dense row-major tuple of tuples, and words are tuples of symbol indices.
Lexicographic order on words is induced by the alphabet's symbol order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

Word = tuple[int, ...]


class InvalidDfaError(ValueError):
    """A structural invariant of a DFA is violated."""


class AlphabetMismatchError(ValueError):
    """An operation received automata over different alphabets."""


@dataclass(frozen=True)
class Alphabet:
    """Ordered, duplicate-free symbol labels; a symbol's index is its position."""

    symbols: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if not self.symbols:
            raise ValueError("alphabet must be nonempty")
        for label in self.symbols:
            if not isinstance(label, str) or not label:
                raise ValueError(f"alphabet label {label!r} must be a nonempty string")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("alphabet labels must be distinct")

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def index(self, label: str) -> int:
        return self.symbols.index(label)


BINARY = Alphabet(("0", "1"))
UNARY = Alphabet(("0",))


@dataclass(frozen=True)
class Dfa:
    """A complete DFA: total transition table, one initial state, accepting set.

    Instances are immutable and hashable, so canonical forms can be deduped
    with ordinary dict/set machinery.  Construction does not validate; call
    :func:`validate` to check the structural invariants.
    """

    state_count: int
    alphabet: Alphabet
    initial: int
    accepting: frozenset[int]
    delta: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))


def validate(dfa: Dfa) -> None:
    """Raise InvalidDfaError naming the first violated DFA invariant."""
    if dfa.state_count < 1:
        raise InvalidDfaError(f"state_count must be positive, got {dfa.state_count}")
    if not 0 <= dfa.initial < dfa.state_count:
        raise InvalidDfaError(
            f"initial state {dfa.initial} out of range for {dfa.state_count} states"
        )
    for q in sorted(dfa.accepting):
        if not 0 <= q < dfa.state_count:
            raise InvalidDfaError(
                f"accepting state {q} out of range for {dfa.state_count} states"
            )
    if len(dfa.delta) != dfa.state_count:
        raise InvalidDfaError(
            f"delta must have {dfa.state_count} rows, got {len(dfa.delta)}"
        )
    width = len(dfa.alphabet)
    for q, row in enumerate(dfa.delta):
        if len(row) != width:
            raise InvalidDfaError(
                f"delta row {q} must have {width} entries, got {len(row)}"
            )
        for c, target in enumerate(row):
            if not 0 <= target < dfa.state_count:
                raise InvalidDfaError(
                    f"delta entry out of range: delta[{q}][{c}] = {target}"
                )


def run(dfa: Dfa, word: Iterable[int], start: int | None = None) -> int:
    """Fold the word through the transition table; empty word returns the start state."""
    state = dfa.initial if start is None else start
    width = len(dfa.alphabet)
    for sym in word:
        if not 0 <= sym < width:
            raise ValueError(f"symbol index {sym} out of range for alphabet of size {width}")
        state = dfa.delta[state][sym]
    return state


def accepts(dfa: Dfa, word: Iterable[int]) -> bool:
    return run(dfa, word) in dfa.accepting


def reachable_states(dfa: Dfa) -> frozenset[int]:
    """States reachable from the initial state under any word."""
    seen = {dfa.initial}
    queue = deque((dfa.initial,))
    while queue:
        state = queue.popleft()
        for target in dfa.delta[state]:
            if target not in seen:
                seen.add(target)
                queue.append(target)
    return frozenset(seen)


def parse_word(alphabet: Alphabet, text: str) -> Word:
    """Parse a word from concatenated labels (greedy longest-label match)."""
    by_length = sorted(
        range(len(alphabet)), key=lambda i: len(alphabet.symbols[i]), reverse=True
    )
    out: list[int] = []
    pos = 0
    while pos < len(text):
        for idx in by_length:
            label = alphabet.symbols[idx]
            if text.startswith(label, pos):
                out.append(idx)
                pos += len(label)
                break
        else:
            raise ValueError(f"no alphabet label matches input at position {pos}: {text[pos:]!r}")
    return tuple(out)


def format_word(alphabet: Alphabet, word: Sequence[int]) -> str:
    return "".join(alphabet.symbols[sym] for sym in word)
