import pytest

from minword import ones_mod_dfa, product, ramp_cycle_dfa, to_dot


def _transition_lines(text):
    return [
        line
        for line in text.splitlines()
        if "->" in line and "label=" in line
    ]


def _node_lines(text):
    return [line for line in text.splitlines() if "[shape=circle]" in line or "[shape=doublecircle]" in line]


def test_ramp_2_3_shape():
    text = to_dot(ramp_cycle_dfa(2, 3), ["q_0", "q_1", "q_2"])
    assert len(_node_lines(text)) == 3
    assert len(_transition_lines(text)) == 6
    assert '"q_2" [shape=doublecircle];' in text
    assert '"q_0" [shape=circle];' in text


def test_single_state_self_loops():
    text = to_dot(ones_mod_dfa(1), ["p_0"])
    assert len(_node_lines(text)) == 1
    assert len(_transition_lines(text)) == 2
    assert '"p_0" -> "p_0" [label="0"];' in text
    assert '"p_0" -> "p_0" [label="1"];' in text


def test_product_node_count():
    prod = product([ones_mod_dfa(2), ramp_cycle_dfa(2, 3)])
    labels = [f"({a},{b})" for a, b in prod.tags]
    text = to_dot(prod.dfa, labels, name="product")
    assert len(_node_lines(text)) <= 6


def test_initial_state_arrow():
    text = to_dot(ramp_cycle_dfa(2, 3))
    assert '__start [shape=point label=""];' in text
    assert '__start -> "0";' in text


def test_default_integer_labels():
    text = to_dot(ones_mod_dfa(2))
    assert '"0" -> "1" [label="1"];' in text


def test_deterministic_output():
    d = ramp_cycle_dfa(3, 5)
    assert to_dot(d) == to_dot(d)


def test_label_quoting():
    text = to_dot(ones_mod_dfa(1), ['say "hi"'])
    assert '"say \\"hi\\""' in text


def test_label_count_must_match():
    with pytest.raises(ValueError):
        to_dot(ones_mod_dfa(2), ["only-one"])
