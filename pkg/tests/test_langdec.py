import itertools

import pytest

from opaq import Nfa, is_empty, is_equivalent, is_included, is_universal
from conftest import random_nfa


def brute_language(nfa, max_len):
    """All accepted words up to max_len, as symbol-name tuples."""
    from opaq import accepts
    out = set()
    for l in range(max_len + 1):
        for w in itertools.product(nfa.alphabet, repeat=l):
            if accepts(nfa, nfa.word(w)):
                out.add(w)
    return out


def test_is_empty():
    nfa = Nfa(["1", "2"], ["a"], [("1", "a", "2")], ["1"], [])
    assert is_empty(nfa).holds
    t = nfa.with_marking(accepting=["2"])
    v = is_empty(t)
    assert not v.holds
    assert v.witness == ("a",)


def test_is_empty_unreachable_accepting():
    nfa = Nfa(["1", "2"], ["a"], [("1", "a", "1")], ["1"], ["2"])
    assert is_empty(nfa).holds


def test_is_universal():
    total = Nfa(["1"], ["a", "b"], [("1", "a", "1"), ("1", "b", "1")],
                ["1"], ["1"])
    assert is_universal(total).holds
    # rejects epsilon when no initial state accepts
    v = is_universal(total.with_marking(accepting=[]))
    assert not v.holds and v.witness == ()


def test_is_universal_shortest_rejected_word():
    # accepts everything except words containing "b"
    nfa = Nfa(["1"], ["a", "b"], [("1", "a", "1")], ["1"], ["1"])
    v = is_universal(nfa)
    assert not v.holds
    assert v.witness == ("b",)


def test_inclusion_basic():
    a = Nfa(["1", "2"], ["a"], [("1", "a", "2")], ["1"], ["2"])  # {a}
    b = Nfa(["1", "2"], ["a"], [("1", "a", "2"), ("2", "a", "2")],
            ["1"], ["1", "2"])  # a*
    assert is_included(a, b).holds
    v = is_included(b, a)
    assert not v.holds
    assert v.witness == ()  # epsilon in b only


def test_inclusion_mixed_alphabets():
    a = Nfa(["1", "2"], ["a"], [("1", "a", "2")], ["1"], ["2"])
    b = Nfa(["1", "2"], ["b"], [("1", "b", "2")], ["1"], ["2"])
    va = is_included(a, b)
    assert not va.holds and va.witness == ("a",)


def test_equivalence():
    # two spellings of (ab)*
    a = Nfa(["1", "2"], ["a", "b"], [("1", "a", "2"), ("2", "b", "1")],
            ["1"], ["1"])
    b = Nfa(["x", "y", "z"], ["a", "b"],
            [("x", "a", "y"), ("y", "b", "z"), ("z", "a", "y")],
            ["x"], ["x", "z"])
    assert is_equivalent(a, b).holds
    v = is_equivalent(a, b.with_marking(accepting=["z"]))
    assert not v.holds


def test_inclusion_agrees_with_brute_force(rng):
    for _ in range(40):
        a = random_nfa(rng, max_states=4, max_syms=2)
        b = random_nfa(rng, max_states=4, max_syms=2)
        la = brute_language(a, 6)
        lb = brute_language(b, 6)
        v = is_included(a, b)
        if la <= lb:
            # bounded check: a real violation may be longer than 6 symbols,
            # but any reported witness must be genuine
            if not v.holds:
                assert len(v.witness) > 6 or v.witness in la - lb
        else:
            assert not v.holds
            assert v.witness in la - lb
            assert len(v.witness) == min(map(len, la - lb))


def test_universality_verdict_is_shortest(rng):
    for _ in range(30):
        nfa = random_nfa(rng, max_states=4, max_syms=2)
        v = is_universal(nfa)
        lang = brute_language(nfa, 5)
        all_words = set(itertools.chain.from_iterable(
            itertools.product(nfa.alphabet, repeat=l) for l in range(6)))
        missing = all_words - lang
        if v.holds:
            assert not missing
        else:
            if len(v.witness) <= 5:
                assert v.witness in missing
                assert len(v.witness) == min(map(len, missing))
