"""Graphviz DOT rendering of DFAs with deterministic node and edge order."""

from __future__ import annotations

from typing import Sequence

from .automaton import Dfa


def _quote(name: str) -> str:
    return '"{}"'.format(name.replace("\\", "\\\\").replace('"', '\\"'))


def to_dot(dfa: Dfa, state_labels: Sequence[str] | None = None, name: str = "dfa") -> str:
    """Render a DFA as a DOT digraph.

    Accepting states are doubled circles, the initial state is marked by an
    arrow from a point pseudo-node, and there is one labeled edge per
    (state, symbol).  Output is bytewise reproducible: nodes in state order,
    edges in (state, symbol) order.
    """
    if state_labels is None:
        state_labels = [str(q) for q in range(dfa.state_count)]
    if len(state_labels) != dfa.state_count:
        raise ValueError(
            f"need {dfa.state_count} state labels, got {len(state_labels)}"
        )
    lines = [f"digraph {name} {{", "  rankdir=LR;", '  __start [shape=point label=""];']
    for q in range(dfa.state_count):
        shape = "doublecircle" if q in dfa.accepting else "circle"
        lines.append(f"  {_quote(state_labels[q])} [shape={shape}];")
    lines.append(f"  __start -> {_quote(state_labels[dfa.initial])};")
    for q in range(dfa.state_count):
        for sym, target in enumerate(dfa.delta[q]):
            lines.append(
                "  {} -> {} [label={}];".format(
                    _quote(state_labels[q]),
                    _quote(state_labels[target]),
                    _quote(dfa.alphabet.symbols[sym]),
                )
            )
    lines.append("}")
    return "\n".join(lines) + "\n"
