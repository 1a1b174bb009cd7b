import itertools

import pytest

from opaq import (CnfFormula, ColorGraph, CsoQuery, IfoQuery, InputError,
                  InsoQuery, IsoQuery, KsoQuery, LboQuery, Nfa, ObservationMap,
                  check, coloring_brute, opacity_brute, sat_brute)
from conftest import random_nfa, random_secret_split


def test_sat_brute():
    assert sat_brute(CnfFormula(2, [[1], [2]])) == (1, 1)
    assert sat_brute(CnfFormula(1, [[1], [-1]])) is None
    # counter order: lowest assignment wins, bit i is variable i+1
    assert sat_brute(CnfFormula(2, [[1, 2]])) == (1, 0)
    with pytest.raises(InputError):
        sat_brute(CnfFormula(25, [[1]]))


def test_sat_brute_agrees_with_itertools(rng):
    from conftest import random_formula
    for _ in range(30):
        phi = random_formula(rng, max_vars=4, max_clauses=6)
        any_sat = any(phi.satisfied_by(bits) for bits in
                      itertools.product([0, 1], repeat=phi.num_vars))
        assert (sat_brute(phi) is not None) == any_sat


def test_coloring_brute():
    assert coloring_brute(ColorGraph(2, [(1, 2)])) == "ab"
    k4 = ColorGraph(4, [(i, j) for i in range(1, 5) for j in range(i + 1, 5)])
    assert coloring_brute(k4) is None
    assert coloring_brute(ColorGraph(3, [])) == "aaa"
    with pytest.raises(InputError):
        coloring_brute(ColorGraph(13, []))


def test_coloring_brute_result_is_proper(rng):
    from conftest import random_color_graph
    for _ in range(20):
        g = random_color_graph(rng, max_vertices=6)
        mu = coloring_brute(g)
        if mu is not None:
            assert all(mu[i - 1] != mu[j - 1] for i, j in g.edges)


def test_opacity_brute_bounded_flag():
    nfa = Nfa(["p", "q"], ["a"], [("p", "a", "q")], ["p"], [])
    q = CsoQuery(["q"], ["p"])
    assert opacity_brute(nfa, q, max_len=1).bounded
    assert not opacity_brute(nfa, q, max_len=4).bounded


def test_opacity_brute_matches_checkers_all_notions(rng):
    for _ in range(15):
        nfa = random_nfa(rng, max_states=3, max_syms=2)
        secret, nonsecret = random_secret_split(rng, nfa)
        max_len = 2 ** nfa.num_states  # complete for the state-based notions
        queries = [CsoQuery(secret, nonsecret),
                   KsoQuery(secret, nonsecret, 1),
                   InsoQuery(secret, nonsecret)]
        init = nfa.states_in(nfa.initial)
        if len(init) > 1:
            queries.append(IsoQuery(init[:1], init[1:]))
        for q in queries:
            got = check(nfa, q).holds
            want = opacity_brute(nfa, q, max_len=max_len).holds
            assert got == want, (type(q).__name__, nfa)


def test_opacity_brute_lbo():
    a = Nfa(["1", "2"], ["a", "b"], [("1", "a", "2")], ["1"], ["2"])
    b = Nfa(["1", "2"], ["a", "b"], [("1", "a", "2"), ("1", "b", "2")],
            ["1"], ["2"])
    assert opacity_brute(None, LboQuery(a, b), max_len=4).holds
    assert not opacity_brute(None, LboQuery(b, a), max_len=4).holds


def test_opacity_brute_respects_observation_map():
    nfa = Nfa(["n", "s"], ["a", "u"],
              [("n", "u", "s"), ("s", "a", "s"), ("n", "a", "n")],
              ["n"], [])
    q = CsoQuery(["s"], ["n"])
    om = ObservationMap.hiding(nfa, ["u"])
    assert not opacity_brute(nfa, q, max_len=4).holds
    assert opacity_brute(nfa, q, om, max_len=4).holds
    assert check(nfa, q, om).holds


def test_opacity_brute_ifo():
    nfa = Nfa(["p", "q", "f", "g"], ["a", "b"],
              [("p", "a", "f"), ("q", "a", "g"), ("q", "b", "g")],
              ["p", "q"], ["f", "g"])
    assert opacity_brute(nfa, IfoQuery([("p", "f")], [("q", "g")]),
                         max_len=4).holds
    assert not opacity_brute(nfa, IfoQuery([("q", "g")], [("p", "f")]),
                             max_len=4).holds
