"""DFA minimization by iterated partition refinement, with canonical numbering.

Minimal complete DFAs are unique up to state renaming, so after renumbering
states by breadth-first first-visit order two minimized DFAs are structurally
equal exactly when they accept the same language.  That makes the output of
minimize() usable directly as a dict key for language-level deduplication.

Dead states stay: the automaton remains complete, matching the convention
that state complexity counts the states of a complete DFA.
"""

from __future__ import annotations

from collections import deque

from .automaton import AlphabetMismatchError, Dfa, reachable_states

# A CanonicalDfa is an ordinary Dfa in minimize() output form; equality of
# canonical forms coincides with language equality over a shared alphabet.
CanonicalDfa = Dfa


def minimize(dfa: Dfa) -> CanonicalDfa:
    """Minimal complete DFA for the same language, canonically numbered.

    Unreachable states are dropped, then states are merged by Moore-style
    refinement: start from the accepting/rejecting split and re-partition by
    (own block, blocks of successors) until the partition stops growing.
    """
    width = len(dfa.alphabet)
    states = sorted(reachable_states(dfa))
    delta = dfa.delta

    # Initial split by acceptance, block ids assigned by first occurrence so
    # they stay dense even when one side is empty.
    block: dict[int, int] = {}
    seen: dict[bool, int] = {}
    for q in states:
        key = q in dfa.accepting
        if key not in seen:
            seen[key] = len(seen)
        block[q] = seen[key]

    n_blocks = len(seen)
    while True:
        sigs: dict[tuple, int] = {}
        new_block: dict[int, int] = {}
        for q in states:
            sig = (block[q],) + tuple(block[delta[q][c]] for c in range(width))
            idx = sigs.get(sig)
            if idx is None:
                idx = sigs[sig] = len(sigs)
            new_block[q] = idx
        if len(sigs) == n_blocks:
            break
        block = new_block
        n_blocks = len(sigs)

    representative: dict[int, int] = {}
    for q in states:
        representative.setdefault(block[q], q)

    # Breadth-first renumbering from the initial block, symbols in order.
    order: dict[int, int] = {block[dfa.initial]: 0}
    queue = deque((block[dfa.initial],))
    rows: list[tuple[int, ...]] = []
    while queue:
        b = queue.popleft()
        rep = representative[b]
        row = []
        for c in range(width):
            tb = block[delta[rep][c]]
            idx = order.get(tb)
            if idx is None:
                idx = order[tb] = len(order)
                queue.append(tb)
            row.append(idx)
        rows.append(tuple(row))

    accepting = frozenset(
        order[b] for b in order if representative[b] in dfa.accepting
    )
    return Dfa(len(order), dfa.alphabet, 0, accepting, tuple(rows))


def state_complexity(dfa: Dfa) -> int:
    """Number of states of the minimal complete DFA for L(dfa)."""
    return minimize(dfa).state_count


def equivalent(a: Dfa, b: Dfa) -> bool:
    """Whether two DFAs over the same alphabet accept the same language."""
    if a.alphabet != b.alphabet:
        raise AlphabetMismatchError(
            f"cannot compare languages over different alphabets: "
            f"{a.alphabet.symbols} != {b.alphabet.symbols}"
        )
    return minimize(a) == minimize(b)
