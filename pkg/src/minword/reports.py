"""Report builders shared by the CLI and the experiment scripts."""

from __future__ import annotations

from dataclasses import dataclass

from .automaton import accepts, format_word
from .constructions import closed_form_witness, ones_mod_dfa, ramp_cycle_dfa
from .minimize import state_complexity
from .shortest import intersection_lss


@dataclass(frozen=True)
class WitnessReport:
    """One verified (m, n) instance of the mn-1 intersection bound.

    passed holds iff the computed lss equals mn-1 and the closed-form word
    is accepted by both automata with exactly that length.
    """

    m: int
    n: int
    expected: int
    lss: int
    witness: str
    formula_word: str
    formula_word_accepted: bool
    sc_ones: int
    sc_ramp: int
    passed: bool


def build_witness_report(m: int, n: int) -> WitnessReport:
    """Verify the (m, n) pair end to end; requires m <= n."""
    ones = ones_mod_dfa(m)
    ramp = ramp_cycle_dfa(m, n)
    expected = m * n - 1
    result = intersection_lss([ones, ramp])
    assert result is not None, "constructed intersection is never empty"
    formula = closed_form_witness(m, n)
    formula_ok = accepts(ones, formula) and accepts(ramp, formula)
    return WitnessReport(
        m=m,
        n=n,
        expected=expected,
        lss=result.length,
        witness=format_word(ones.alphabet, result.witness),
        formula_word=format_word(ones.alphabet, formula),
        formula_word_accepted=formula_ok,
        sc_ones=state_complexity(ones),
        sc_ramp=state_complexity(ramp),
        passed=(
            result.length == expected
            and formula_ok
            and len(formula) == expected
        ),
    )


def verify_range(max_n: int) -> list[WitnessReport]:
    """Witness reports for every pair 1 <= m <= n <= max_n, in (m, n) order."""
    if max_n < 1:
        raise ValueError(f"max_n must be positive, got {max_n}")
    return [
        build_witness_report(m, n)
        for m in range(1, max_n + 1)
        for n in range(m, max_n + 1)
    ]
