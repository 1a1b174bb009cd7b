"""Decision procedures for emptiness, universality, inclusion, equivalence.

Inclusion determinizes the right-hand side in full (no antichains); this
repository exists to exhibit the exponential behaviour, and correctness
plus shortest witnesses take priority.  Witnesses are reported over the
original alphabet names.
"""

import time
from collections import deque

from . import kernels
from .nfa import Nfa
from .verdict import SearchStats, Verdict


def is_empty(nfa):
    """Accepts-nothing verdict; witness = shortest accepted word when nonempty."""
    t0 = time.perf_counter()
    if nfa.initial == 0 or nfa.accepting == 0:
        return Verdict(True, stats=SearchStats(0, time.perf_counter() - t0))
    nodes, _, parent, parent_sym, hit = kernels.explore(
        nfa, nfa.initial, stop_mode=kernels.STOP_SECRET_ONLY,
        m1=nfa.accepting, m2=0)
    stats = SearchStats(len(nodes), time.perf_counter() - t0)
    if hit < 0:
        return Verdict(True, stats=stats)
    word = kernels.word_to(parent, parent_sym, hit)
    return Verdict(False, witness=nfa.word_names(word), stats=stats)


def is_universal(nfa):
    """True iff the accepted language is all of Sigma*.

    The search runs over the observer of the automaton including the
    implicit empty-estimate sink; a node missing every accepting state
    yields the shortest rejected word.
    """
    t0 = time.perf_counter()
    nodes, _, parent, parent_sym, hit = kernels.explore(
        nfa, nfa.initial, include_empty=True,
        stop_mode=kernels.STOP_MISSES, m1=nfa.accepting)
    stats = SearchStats(len(nodes), time.perf_counter() - t0)
    if hit < 0:
        return Verdict(True, stats=stats)
    word = kernels.word_to(parent, parent_sym, hit)
    return Verdict(False, witness=nfa.word_names(word), stats=stats)


def _on_alphabet(nfa, alphabet):
    """Recast nfa over a (super-)alphabet; absent symbols get no transitions."""
    if tuple(alphabet) == nfa.alphabet:
        return nfa
    return Nfa(nfa.states, alphabet,
               nfa.transitions(),
               nfa.states_in(nfa.initial),
               nfa.states_in(nfa.accepting))


def union_alphabet(a, b):
    """a's alphabet followed by b's extra symbols, order preserved."""
    extra = [s for s in b.alphabet if s not in set(a.alphabet)]
    return a.alphabet + tuple(extra)


def is_included(a, b):
    """True iff L_m(a) is a subset of L_m(b).

    Searches the product of a's states with the observer of b (empty
    estimate allowed as a sink), looking for a pair (accepting in a,
    estimate missing every accepting state of b); BFS yields the shortest
    word in the difference.
    """
    t0 = time.perf_counter()
    sigma = union_alphabet(a, b)
    a = _on_alphabet(a, sigma)
    b = _on_alphabet(b, sigma)
    n_syms = len(sigma)

    def violating(q, est):
        return (a.accepting >> q & 1) and est & b.accepting == 0

    root_b = b.initial
    queue = deque()
    seen = set()
    ai = a.initial
    while ai:
        q = (ai & -ai).bit_length() - 1
        ai &= ai - 1
        if violating(q, root_b):
            return Verdict(False, witness=(),
                           stats=SearchStats(1, time.perf_counter() - t0))
        if (q, root_b) not in seen:
            seen.add((q, root_b))
            queue.append((q, root_b, ()))
    while queue:
        q, est, word = queue.popleft()
        for sym in range(n_syms):
            nxt_b = 0
            e = est
            while e:
                p = (e & -e).bit_length() - 1
                e &= e - 1
                nxt_b |= b._succ[p][sym]
            m = a._succ[q][sym]
            while m:
                r = (m & -m).bit_length() - 1
                m &= m - 1
                if (r, nxt_b) in seen:
                    continue
                w = word + (sym,)
                if violating(r, nxt_b):
                    stats = SearchStats(len(seen) + 1, time.perf_counter() - t0)
                    return Verdict(False, witness=tuple(sigma[s] for s in w),
                                   stats=stats)
                seen.add((r, nxt_b))
                queue.append((r, nxt_b, w))
    return Verdict(True, stats=SearchStats(len(seen), time.perf_counter() - t0))


def is_equivalent(a, b):
    """Conjunction of both inclusions; witness from whichever fails."""
    fwd = is_included(a, b)
    if not fwd.holds:
        return fwd
    bwd = is_included(b, a)
    stats = SearchStats(fwd.stats.nodes + bwd.stats.nodes,
                        fwd.stats.seconds + bwd.stats.seconds)
    return Verdict(bwd.holds, witness=bwd.witness, stats=stats)
