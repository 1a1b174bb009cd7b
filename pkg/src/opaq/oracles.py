"""Naive brute-force references used to cross-validate the checkers.

Everything here is intentionally independent of the observer machinery:
the opacity oracle re-derives successor maps from the raw transition
triples and evaluates the definitional quantifiers by enumerating words.
"""

import itertools

from .errors import InputError
from .observe import ObservationMap
from .opacity import (CsoQuery, IfoQuery, InsoQuery, IsoQuery, KsoQuery,
                      LboQuery)
from .reductions import COLORS
from .verdict import Verdict


def sat_brute(phi):
    """Lowest satisfying assignment in binary-counter order, or None.

    Bit i of the counter is the value of variable i+1.
    """
    n = phi.num_vars
    if n > 24:
        raise InputError("brute-force SAT capped at 24 variables")
    for a in range(2 ** n):
        bits = [(a >> i) & 1 for i in range(n)]
        if phi.satisfied_by(bits):
            return tuple(bits)
    return None


def coloring_brute(g):
    """Lexicographically least proper 3-coloring as a word over a, b, c."""
    n = g.num_vertices
    if n > 12:
        raise InputError("brute-force coloring capped at 12 vertices")
    for mu in itertools.product(COLORS, repeat=n):
        if all(mu[i - 1] != mu[j - 1] for i, j in g.edges):
            return "".join(mu)
    return None


# -- definitional opacity oracle ----------------------------------------


def _succ_map(nfa):
    succ = {}
    for src, sym, dst in nfa.transitions():
        succ.setdefault((src, sym), set()).add(dst)
    return succ


def _apply(succ, states, word):
    cur = set(states)
    for a in word:
        cur = set().union(*(succ.get((q, a), ()) for q in cur)) if cur else set()
    return cur


def _words_up_to(alphabet, max_len):
    for length in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=length)


def opacity_brute(nfa, query, omap=None, max_len=8):
    """Evaluate an opacity definition by enumerating all words up to max_len.

    Groups words by their projection and checks the definitional
    quantifiers directly.  Complete only when max_len is large enough
    (2^n covers the state-based notions); otherwise the verdict carries
    bounded=True.  Test-only: resource use is exponential in max_len.
    """
    if omap is None:
        omap = ObservationMap.all_of(nfa if not isinstance(query, LboQuery)
                                     else query.secret_lang)
    if isinstance(query, LboQuery):
        return _brute_lbo(query, omap, max_len)
    omap.validate(nfa)
    n = nfa.num_states
    bounded = max_len < 2 ** n
    succ = _succ_map(nfa)
    initial = set(nfa.states_in(nfa.initial))
    if isinstance(query, CsoQuery):
        return _brute_grouped(nfa, succ, omap, max_len, bounded,
                              lambda w, r: r & query.secret_states,
                              lambda w, r: r & query.nonsecret_states,
                              initial)
    if isinstance(query, IsoQuery):
        holds = _brute_iso(nfa, succ, omap, max_len, query)
        return Verdict(holds, bounded=bounded)
    if isinstance(query, IfoQuery):
        holds = _brute_ifo(nfa, succ, omap, max_len, query)
        return Verdict(holds, bounded=bounded)
    if isinstance(query, KsoQuery):
        holds = _brute_kso(nfa, succ, omap, max_len, query.secret_states,
                           query.nonsecret_states, query.k)
        return Verdict(holds, bounded=True)
    if isinstance(query, InsoQuery):
        holds = _brute_kso(nfa, succ, omap, max_len, query.secret_states,
                           query.nonsecret_states, None)
        return Verdict(holds, bounded=True)
    raise InputError("unknown query type %r" % type(query).__name__)


def _brute_grouped(nfa, succ, omap, max_len, bounded, sec_of, nsec_of, initial):
    flags = {}  # projection -> [reaches secret, reaches non-secret]
    for w in _words_up_to(nfa.alphabet, max_len):
        r = _apply(succ, initial, w)
        f = flags.setdefault(omap.project(w), [False, False])
        f[0] = f[0] or bool(sec_of(w, r))
        f[1] = f[1] or bool(nsec_of(w, r))
    holds = all(ns for s, ns in flags.values() if s)
    return Verdict(holds, bounded=bounded)


def _brute_iso(nfa, succ, omap, max_len, query):
    flags = {}
    for w in _words_up_to(nfa.alphabet, max_len):
        f = flags.setdefault(omap.project(w), [False, False])
        f[0] = f[0] or bool(_apply(succ, query.secret_initial, w))
        f[1] = f[1] or bool(_apply(succ, query.nonsecret_initial, w))
    return all(ns for s, ns in flags.values() if s)


def _brute_ifo(nfa, succ, omap, max_len, query):
    flags = {}
    for w in _words_up_to(nfa.alphabet, max_len):
        f = flags.setdefault(omap.project(w), [False, False])
        f[0] = f[0] or any(qf in _apply(succ, {q0}, w)
                           for q0, qf in query.secret_pairs)
        f[1] = f[1] or any(qf in _apply(succ, {q0}, w)
                           for q0, qf in query.nonsecret_pairs)
    return all(ns for s, ns in flags.values() if s)


def _brute_kso(nfa, succ, omap, max_len, secret, nonsecret, k):
    initial = set(nfa.states_in(nfa.initial))
    flags = {}  # (P(s), P(t)) -> [secret survives, non-secret survives]
    for w in _words_up_to(nfa.alphabet, max_len):
        for cut in range(len(w) + 1):
            s, t = w[:cut], w[cut:]
            pt = omap.project(t)
            if k is not None and len(pt) > k:
                continue
            mid = _apply(succ, initial, s)
            f = flags.setdefault((omap.project(s), pt), [False, False])
            f[0] = f[0] or bool(_apply(succ, mid & set(secret), t))
            f[1] = f[1] or bool(_apply(succ, mid & set(nonsecret), t))
    return all(ns for s, ns in flags.values() if s)


def _brute_lbo(query, omap, max_len):
    a, b = query.secret_lang, query.nonsecret_lang
    succ_a, succ_b = _succ_map(a), _succ_map(b)
    acc_a = set(a.states_in(a.accepting))
    acc_b = set(b.states_in(b.accepting))
    init_a = set(a.states_in(a.initial))
    init_b = set(b.states_in(b.initial))
    proj_s, proj_ns = set(), set()
    for w in _words_up_to(a.alphabet, max_len):
        if _apply(succ_a, init_a, w) & acc_a:
            proj_s.add(omap.project(w))
        if _apply(succ_b, init_b, w) & acc_b:
            proj_ns.add(omap.project(w))
    return Verdict(proj_s <= proj_ns, bounded=True)
