"""Checkers for the six opacity notions.

Every state-based checker first rewrites unobservable transitions away, so
the projection becomes the identity, and then searches estimates (CSO),
estimate pairs (ISO, k-step, infinite-step), or delegates to language
inclusion (IFO, LBO).  A failing verdict always carries a violating
observed word: shortest, ties broken by lowest symbol index.
"""

import time
from collections import deque
from dataclasses import dataclass
from typing import Optional

from . import kernels
from .errors import InputError
from .langdec import is_included
from .nfa import Nfa, run, step
from .observe import ObservationMap, eliminate_unobservable, unobservable_closure
from .verdict import SearchStats, Verdict


# -- queries ------------------------------------------------------------


@dataclass(frozen=True)
class CsoQuery:
    secret_states: frozenset
    nonsecret_states: frozenset

    def __init__(self, secret_states, nonsecret_states):
        object.__setattr__(self, "secret_states", frozenset(secret_states))
        object.__setattr__(self, "nonsecret_states", frozenset(nonsecret_states))


@dataclass(frozen=True)
class IsoQuery:
    secret_initial: frozenset
    nonsecret_initial: frozenset

    def __init__(self, secret_initial, nonsecret_initial):
        object.__setattr__(self, "secret_initial", frozenset(secret_initial))
        object.__setattr__(self, "nonsecret_initial", frozenset(nonsecret_initial))


@dataclass(frozen=True)
class IfoQuery:
    secret_pairs: frozenset      # of (initial state, accepting state) name pairs
    nonsecret_pairs: frozenset

    def __init__(self, secret_pairs, nonsecret_pairs):
        object.__setattr__(self, "secret_pairs", frozenset(map(tuple, secret_pairs)))
        object.__setattr__(self, "nonsecret_pairs", frozenset(map(tuple, nonsecret_pairs)))


@dataclass(frozen=True)
class KsoQuery:
    secret_states: frozenset
    nonsecret_states: frozenset
    k: int

    def __init__(self, secret_states, nonsecret_states, k):
        if not isinstance(k, int) or k < 0:
            raise InputError("k must be a non-negative integer")
        object.__setattr__(self, "secret_states", frozenset(secret_states))
        object.__setattr__(self, "nonsecret_states", frozenset(nonsecret_states))
        object.__setattr__(self, "k", k)


@dataclass(frozen=True)
class InsoQuery:
    secret_states: frozenset
    nonsecret_states: frozenset

    def __init__(self, secret_states, nonsecret_states):
        object.__setattr__(self, "secret_states", frozenset(secret_states))
        object.__setattr__(self, "nonsecret_states", frozenset(nonsecret_states))


@dataclass
class LboQuery:
    """Secret and non-secret languages given as acceptor NFAs.

    Disjointness of the two languages is not checked; the checker decides
    the inclusion of their projections either way.
    """
    secret_lang: Nfa
    nonsecret_lang: Nfa


def _disjoint(a, b, what):
    overlap = a & b
    if overlap:
        raise InputError("secret and non-secret %s overlap: %s"
                         % (what, " ".join(sorted(map(str, overlap)))))


def _state_masks(nfa, secret, nonsecret):
    _disjoint(secret, nonsecret, "state sets")
    return nfa.mask(secret), nfa.mask(nonsecret)


# -- CSO ----------------------------------------------------------------


def check_cso(nfa, query, omap=None):
    """No reachable observer node may contain secret but no non-secret states."""
    t0 = time.perf_counter()
    if omap is None:
        omap = ObservationMap.all_of(nfa)
    s_mask, ns_mask = _state_masks(nfa, query.secret_states, query.nonsecret_states)
    elim = eliminate_unobservable(nfa, omap)
    if s_mask == 0 or elim.initial == 0:
        return Verdict(True, stats=SearchStats(0, time.perf_counter() - t0))
    nodes, _, parent, parent_sym, hit = kernels.explore(
        elim, elim.initial, stop_mode=kernels.STOP_SECRET_ONLY,
        m1=s_mask, m2=ns_mask)
    stats = SearchStats(len(nodes), time.perf_counter() - t0)
    if hit < 0:
        return Verdict(True, stats=stats)
    word = kernels.word_to(parent, parent_sym, hit)
    return Verdict(False, witness=elim.word_names(word), stats=stats)


# -- ISO ----------------------------------------------------------------


def check_iso(nfa, query, omap=None):
    """Projected generated-language inclusion via a synchronous pair search.

    Tracks the emptiness of the non-secret estimate explicitly: a reachable
    pair (nonempty, empty) is a violation.
    """
    t0 = time.perf_counter()
    if omap is None:
        omap = ObservationMap.all_of(nfa)
    i_s = nfa.mask(query.secret_initial)
    i_ns = nfa.mask(query.nonsecret_initial)
    _disjoint(query.secret_initial, query.nonsecret_initial, "initial sets")
    if (i_s | i_ns) & ~nfa.initial:
        raise InputError("secret/non-secret initial states must be initial")
    root_s = unobservable_closure(nfa, omap, i_s)
    root_ns = unobservable_closure(nfa, omap, i_ns)
    elim = eliminate_unobservable(nfa, omap)
    if root_s == 0:
        return Verdict(True, stats=SearchStats(0, time.perf_counter() - t0))
    if root_ns == 0:
        return Verdict(False, witness=(),
                       stats=SearchStats(1, time.perf_counter() - t0))
    seen = {(root_s, root_ns)}
    queue = deque([(root_s, root_ns, ())])
    n_syms = elim.num_symbols
    while queue:
        es, ens, word = queue.popleft()
        for a in range(n_syms):
            ns2 = step(elim, es, a)
            if ns2 == 0:
                continue  # nothing generated from I_S: no violation on this branch
            nns2 = step(elim, ens, a)
            if (ns2, nns2) in seen:
                continue
            w = word + (a,)
            if nns2 == 0:
                stats = SearchStats(len(seen) + 1, time.perf_counter() - t0)
                return Verdict(False, witness=elim.word_names(w), stats=stats)
            seen.add((ns2, nns2))
            queue.append((ns2, nns2, w))
    return Verdict(True, stats=SearchStats(len(seen), time.perf_counter() - t0))


# -- k-step and infinite-step -------------------------------------------


def _check_pair_depth(nfa, query, omap, k):
    """Shared search for k-SO (finite k) and INSO (k = None).

    Single BFS over two node kinds ordered by total observed word length:
    observer estimates E (still extending the pre-secret prefix s), and
    estimate pairs (S, NS) obtained by splitting some E at its secret and
    non-secret parts and stepping both in lockstep for the suffix t.  A
    pair with S nonempty and NS empty is a violation; the witness is the
    word to E followed by the pair path, with the split position recorded.
    """
    t0 = time.perf_counter()
    if omap is None:
        omap = ObservationMap.all_of(nfa)
    s_mask, ns_mask = _state_masks(nfa, query.secret_states, query.nonsecret_states)
    elim = eliminate_unobservable(nfa, omap)
    if s_mask == 0 or elim.initial == 0:
        return Verdict(True, stats=SearchStats(0, time.perf_counter() - t0))
    n_syms = elim.num_symbols
    root = elim.initial
    seen_est = {root}
    seen_pair = {}  # (S, NS) -> least suffix depth at which it was reached
    explored = 0
    queue = deque()

    def enter_pair(est, word, depth_word):
        # depth-0 check and seeding of the suffix search for one estimate
        s0 = est & s_mask
        if s0 == 0:
            return None
        ns0 = est & ns_mask
        if ns0 == 0:
            return Verdict(False, witness=elim.word_names(word),
                           witness_split=depth_word)
        if k is None or k >= 1:
            key = (s0, ns0)
            prev = seen_pair.get(key)
            if prev is None or prev > 0:
                seen_pair[key] = 0
                queue.append((1, s0, ns0, 0, word, depth_word))
        return None

    v = enter_pair(root, (), 0)
    if v is None:
        queue.append((0, root, 0, 0, (), 0))
    while v is None and queue:
        kind, m1, m2, depth, word, split = queue.popleft()
        explored += 1
        if kind == 0:
            est = m1
            for a in range(n_syms):
                nxt = step(elim, est, a)
                if nxt == 0 or nxt in seen_est:
                    continue
                seen_est.add(nxt)
                w = word + (a,)
                v = enter_pair(nxt, w, len(w))
                if v is not None:
                    break
                queue.append((0, nxt, 0, 0, w, 0))
        else:
            for a in range(n_syms):
                s2 = step(elim, m1, a)
                if s2 == 0:
                    continue
                ns2 = step(elim, m2, a)
                w = word + (a,)
                if ns2 == 0:
                    v = Verdict(False, witness=elim.word_names(w),
                                witness_split=split)
                    break
                d2 = depth + 1
                if k is not None and d2 >= k:
                    continue
                key = (s2, ns2)
                prev = seen_pair.get(key)
                # a pair seen at a smaller suffix depth dominates (more budget left)
                if prev is None or (k is not None and prev > d2):
                    seen_pair[key] = d2
                    queue.append((1, s2, ns2, d2, w, split))
    if v is None:
        v = Verdict(True)
    v.stats = SearchStats(explored + len(queue), time.perf_counter() - t0)
    return v


def check_kso(nfa, query, omap=None):
    """k-step opacity: the suffix search is capped at k observed symbols."""
    return _check_pair_depth(nfa, query, omap, query.k)


def check_inso(nfa, query, omap=None):
    """Infinite-step opacity: the suffix search runs to a fixpoint."""
    return _check_pair_depth(nfa, query, omap, None)


# -- IFO and LBO --------------------------------------------------------


def merge_pairs(pairs):
    """Merge pairs sharing a left component: {(q, f)} -> {q: {f, ...}}."""
    merged = {}
    for q0, qf in pairs:
        merged.setdefault(q0, set()).add(qf)
    return merged


def pairs_language_nfa(nfa, pairs):
    """Acceptor for the union of L_m(nfa, q0, F0) over merged pairs.

    Built as a disjoint union of one copy of nfa per merged pair; copy
    names are prefixed "u<i>." to keep state names unique.
    """
    merged = merge_pairs(pairs)
    lefts = sorted(merged, key=nfa.state_index)
    states, trans, initial, accepting = [], [], [], []
    for i, q0 in enumerate(lefts):
        tag = "u%d." % i
        states.extend(tag + s for s in nfa.states)
        trans.extend((tag + src, sym, tag + dst) for src, sym, dst in nfa.transitions())
        initial.append(tag + q0)
        accepting.extend(tag + f for f in merged[q0])
    return Nfa(states, nfa.alphabet, trans, initial, accepting)


def _is_product_form(pairs):
    lefts = {q for q, _ in pairs}
    rights = {f for _, f in pairs}
    return len(pairs) == len(lefts) * len(rights), lefts, rights


def check_ifo(nfa, query, omap=None, allow_product_shortcut=True):
    """Initial-and-final-state opacity via projected language inclusion.

    Pairs with a common left component are merged.  When the non-secret
    pairs form a full product I_NS x F_NS, the non-secret language is the
    automaton itself with those markings (single copy); otherwise a union
    of copies is built.  Set allow_product_shortcut=False to force the
    general union construction (used for cross-checking).
    """
    t0 = time.perf_counter()
    if omap is None:
        omap = ObservationMap.all_of(nfa)
    sp, nsp = query.secret_pairs, query.nonsecret_pairs
    _disjoint(sp, nsp, "pair sets")
    for q0, qf in sp | nsp:
        if not nfa.initial >> nfa.state_index(q0) & 1:
            raise InputError("pair left component %s is not initial" % q0)
        if not nfa.accepting >> nfa.state_index(qf) & 1:
            raise InputError("pair right component %s is not accepting" % qf)
    if not sp:
        return Verdict(True, stats=SearchStats(0, time.perf_counter() - t0))
    lang_s = pairs_language_nfa(nfa, sp)
    product, lefts, rights = _is_product_form(nsp)
    if nsp and product and allow_product_shortcut:
        lang_ns = nfa.with_marking(initial=lefts, accepting=rights)
    elif nsp:
        lang_ns = pairs_language_nfa(nfa, nsp)
    else:
        lang_ns = nfa.with_marking(initial=(), accepting=())
    v = check_lbo(LboQuery(lang_s, lang_ns), omap)
    v.stats.seconds = time.perf_counter() - t0
    return v


def check_lbo(query, omap=None):
    """Language-based opacity: P(L_m(secret)) included in P(L_m(nonsecret))."""
    t0 = time.perf_counter()
    a, b = query.secret_lang, query.nonsecret_lang
    if set(a.alphabet) != set(b.alphabet):
        raise InputError("secret and non-secret languages must share an alphabet")
    if omap is None:
        omap = ObservationMap.all_of(a)
    elim_s = eliminate_unobservable(a, omap)
    elim_ns = eliminate_unobservable(b, omap)
    inc = is_included(elim_s, elim_ns)
    return Verdict(inc.holds, witness=inc.witness,
                   stats=SearchStats(inc.stats.nodes, time.perf_counter() - t0))


# -- dispatch and witness replay ----------------------------------------


def check(nfa, query, omap=None):
    """Dispatch on the query type; nfa may be None for LboQuery."""
    if isinstance(query, CsoQuery):
        return check_cso(nfa, query, omap)
    if isinstance(query, IsoQuery):
        return check_iso(nfa, query, omap)
    if isinstance(query, IfoQuery):
        return check_ifo(nfa, query, omap)
    if isinstance(query, KsoQuery):
        return check_kso(nfa, query, omap)
    if isinstance(query, InsoQuery):
        return check_inso(nfa, query, omap)
    if isinstance(query, LboQuery):
        return check_lbo(query, omap)
    raise InputError("unknown query type %r" % type(query).__name__)


def replay_witness(nfa, query, omap, verdict):
    """Definitional replay: does the verdict's witness exhibit a violation?"""
    if verdict.holds or verdict.witness is None:
        return False
    if isinstance(query, LboQuery):
        a, b = query.secret_lang, query.nonsecret_lang
        om = omap or ObservationMap.all_of(a)
        ea, eb = eliminate_unobservable(a, om), eliminate_unobservable(b, om)
        w = ea.word(verdict.witness)
        return (run(ea, ea.initial, w) & ea.accepting != 0
                and run(eb, eb.initial, w) & eb.accepting == 0)
    om = omap or ObservationMap.all_of(nfa)
    elim = eliminate_unobservable(nfa, om)
    w = elim.word(verdict.witness)
    if isinstance(query, CsoQuery):
        e = run(elim, elim.initial, w)
        return (e & nfa.mask(query.secret_states) != 0
                and e & nfa.mask(query.nonsecret_states) == 0)
    if isinstance(query, IsoQuery):
        rs = run(elim, unobservable_closure(nfa, om, nfa.mask(query.secret_initial)), w)
        rn = run(elim, unobservable_closure(nfa, om, nfa.mask(query.nonsecret_initial)), w)
        return rs != 0 and rn == 0
    if isinstance(query, (KsoQuery, InsoQuery)):
        split = verdict.witness_split
        if split is None:
            return False
        s, t = w[:split], w[split:]
        if isinstance(query, KsoQuery) and len(t) > query.k:
            return False
        e = run(elim, elim.initial, s)
        return (run(elim, e & nfa.mask(query.secret_states), t) != 0
                and run(elim, e & nfa.mask(query.nonsecret_states), t) == 0)
    if isinstance(query, IfoQuery):
        lang_s = pairs_language_nfa(nfa, query.secret_pairs)
        lang_ns = (pairs_language_nfa(nfa, query.nonsecret_pairs)
                   if query.nonsecret_pairs
                   else nfa.with_marking(initial=(), accepting=()))
        return replay_witness(None, LboQuery(lang_s, lang_ns), om, verdict)
    raise InputError("unknown query type %r" % type(query).__name__)
