import pytest
from hypothesis import given, strategies as st

from opaq import InputError, Nfa, accepts, reachable, run, step


@pytest.fixture
def toggle():
    # two states flipping under "a", absorbing under "b"
    return Nfa(["p", "q"], ["a", "b"],
               [("p", "a", "q"), ("q", "a", "p"), ("p", "b", "p")],
               ["p"], ["q"])


def test_indexing(toggle):
    assert toggle.num_states == 2
    assert toggle.num_symbols == 2
    assert toggle.state_index("q") == 1
    assert toggle.symbol_index("b") == 1
    assert toggle.mask(["p", "q"]) == 0b11
    assert toggle.states_in(0b10) == ("q",)


def test_unknown_names_rejected(toggle):
    with pytest.raises(InputError):
        toggle.state_index("r")
    with pytest.raises(InputError):
        toggle.word(["z"])
    with pytest.raises(InputError):
        Nfa(["p"], ["a"], [("p", "a", "r")], ["p"])


def test_duplicate_names_rejected():
    with pytest.raises(InputError):
        Nfa(["p", "p"], ["a"], [], ["p"])
    with pytest.raises(InputError):
        Nfa(["p"], ["a", "a"], [], ["p"])


def test_duplicate_transitions_are_deduplicated():
    nfa = Nfa(["p"], ["a"], [("p", "a", "p"), ("p", "a", "p")], ["p"])
    assert nfa.num_transitions() == 1


def test_step_and_run(toggle):
    i = toggle.initial
    assert step(toggle, i, 0) == toggle.mask(["q"])
    assert run(toggle, i, toggle.word(["a", "a"])) == toggle.mask(["p"])
    assert run(toggle, i, ()) == i
    # "b" from q has no transition
    assert run(toggle, i, toggle.word(["a", "b"])) == 0


def test_step_rejects_bad_symbol(toggle):
    with pytest.raises(InputError):
        step(toggle, toggle.initial, 5)


def test_accepts(toggle):
    assert accepts(toggle, toggle.word(["a"]))
    assert not accepts(toggle, ())
    assert accepts(toggle, toggle.word(["b", "a"]))


def test_reachable(toggle):
    assert reachable(toggle, toggle.initial) == 0b11
    dead = Nfa(["p", "q"], ["a"], [("q", "a", "q")], ["p"])
    assert reachable(dead, dead.initial) == 0b01


def test_with_marking_shares_structure(toggle):
    other = toggle.with_marking(initial=["q"], accepting=["p"])
    assert other.initial == toggle.mask(["q"])
    assert other.accepting == toggle.mask(["p"])
    assert other._succ is toggle._succ
    # original untouched
    assert toggle.initial == toggle.mask(["p"])


def test_transitions_roundtrip(toggle):
    triples = list(toggle.transitions())
    rebuilt = Nfa(toggle.states, toggle.alphabet, triples, ["p"], ["q"])
    assert rebuilt._succ == toggle._succ


@given(st.lists(st.integers(0, 1), max_size=12),
       st.lists(st.integers(0, 1), max_size=12))
def test_run_is_monoid_action(u, v):
    nfa = Nfa(["p", "q", "r"], ["a", "b"],
              [("p", "a", "q"), ("q", "a", "r"), ("r", "b", "p"),
               ("p", "b", "p"), ("q", "b", "q")],
              ["p", "q"])
    w = tuple(u) + tuple(v)
    assert run(nfa, nfa.initial, w) == run(nfa, run(nfa, nfa.initial, tuple(u)),
                                           tuple(v))


@given(st.integers(0, 7), st.lists(st.integers(0, 1), max_size=8))
def test_step_distributes_over_union(estimate, w):
    nfa = Nfa(["p", "q", "r"], ["a", "b"],
              [("p", "a", "q"), ("q", "a", "r"), ("r", "b", "p"),
               ("q", "b", "p")],
              ["p"])
    w = tuple(w)
    parts = [1 << i for i in range(3) if estimate >> i & 1]
    union = 0
    for p in parts:
        union |= run(nfa, p, w)
    assert run(nfa, estimate, w) == union
