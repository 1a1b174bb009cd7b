"""Shared seeded generators for the test corpus."""

import random

import pytest

from opaq import CnfFormula, ColorGraph, Nfa


def random_nfa(rng, max_states=6, max_syms=3, density=0.3,
               with_unobservable=False):
    n = rng.randint(2, max_states)
    k = rng.randint(1, max_syms)
    states = ["s%d" % i for i in range(n)]
    alphabet = ["a%d" % i for i in range(k)]
    trans = [(q, a, r) for q in states for a in alphabet for r in states
             if rng.random() < density]
    initial = [q for q in states if rng.random() < 0.4] or [states[0]]
    accepting = [q for q in states if rng.random() < 0.4]
    nfa = Nfa(states, alphabet, trans, initial, accepting)
    if not with_unobservable:
        return nfa
    unobs = frozenset(a for a in alphabet[1:] if rng.random() < 0.3)
    return nfa, unobs


def random_secret_split(rng, nfa):
    """Random disjoint (secret, nonsecret) state sets, secret nonempty."""
    states = list(nfa.states)
    secret = [rng.choice(states)]
    rest = [q for q in states if q not in secret]
    nonsecret = [q for q in rest if rng.random() < 0.6]
    return frozenset(secret), frozenset(nonsecret)


def random_formula(rng, max_vars=8, max_clauses=12, k=3):
    n = rng.randint(2, max_vars)
    m = rng.randint(1, max_clauses)
    clauses = []
    for _ in range(m):
        size = rng.randint(1, k)
        lits = set()
        while len(lits) < size:
            v = rng.randint(1, n)
            lits.add(v if rng.random() < 0.5 else -v)
        clauses.append(lits)
    return CnfFormula(n, clauses)


def random_color_graph(rng, max_vertices=7, p=0.5):
    n = rng.randint(2, max_vertices)
    edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
             if rng.random() < p]
    return ColorGraph(n, edges)


@pytest.fixture
def rng():
    return random.Random(20260823)
