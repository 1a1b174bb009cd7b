"""Constructive reductions between hard problems and opacity notions.

Contains the CNF-satisfiability gadget (a binary counter over variable
states driven by a Zimin-index word), the 3-coloring gadget, and the
instance rewritings that carry a current-state opacity instance into the
other notions, plus the universality rewrite.
"""

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from .errors import InputError
from .nfa import Nfa, reachable
from .observe import ObservationMap
from .opacity import IfoQuery, IsoQuery, LboQuery


# -- reduction inputs ---------------------------------------------------


@dataclass(frozen=True)
class CnfFormula:
    """CNF formula; literals are signed 1-based variable indices."""

    num_vars: int
    clauses: Tuple[frozenset, ...]

    def __init__(self, num_vars, clauses):
        clauses = tuple(frozenset(c) for c in clauses)
        if num_vars < 0:
            raise InputError("negative variable count")
        for c in clauses:
            for lit in c:
                if lit == 0 or abs(lit) > num_vars:
                    raise InputError("literal %d out of range" % lit)
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "clauses", clauses)

    @property
    def num_clauses(self):
        return len(self.clauses)

    def clauses_with(self, lit):
        """Indices (0-based) of clauses containing the literal."""
        return frozenset(j for j, c in enumerate(self.clauses) if lit in c)

    def satisfied_by(self, bits):
        """bits[i] is the value of variable i+1."""
        return all(any((lit > 0) == bool(bits[abs(lit) - 1]) for lit in c)
                   for c in self.clauses)


@dataclass(frozen=True)
class ColorGraph:
    """Undirected simple graph with 1-based vertices."""

    num_vertices: int
    edges: Tuple[Tuple[int, int], ...]

    def __init__(self, num_vertices, edges):
        seen = set()
        norm = []
        for i, j in edges:
            if i == j:
                raise InputError("self-loop edge (%d, %d)" % (i, j))
            if not (1 <= i <= num_vertices and 1 <= j <= num_vertices):
                raise InputError("edge (%d, %d) out of range" % (i, j))
            e = (min(i, j), max(i, j))
            if e in seen:
                raise InputError("duplicate edge (%d, %d)" % e)
            seen.add(e)
            norm.append(e)
        object.__setattr__(self, "num_vertices", num_vertices)
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @property
    def num_edges(self):
        return len(self.edges)


@dataclass
class CsoInstance:
    """A CSO query bundled with its automaton and (all-observable) map."""

    nfa: Nfa
    secret: frozenset
    nonsecret: frozenset
    omap: ObservationMap
    meta: Dict[str, int] = field(default_factory=dict)


# -- SAT -> CSO (binary-counter gadget) ---------------------------------


def _sym(i, j):
    """Flattened product symbol name: track index i, clause index j (1-based)."""
    return "a%d.c%d" % (i, j)


def sat_to_cso(phi):
    """CSO instance that is opaque iff the formula is satisfiable.

    2n+2 states: a secret sink q_s, a non-secret sink q_ns, and one pair
    x<i>_0 / x<i>_1 per variable holding the current assignment bit.  The
    alphabet is the flattened product of track symbols a1..a<n+1> with the
    clauses, ordered track-major so that lexicographically least witnesses
    pick the lowest-index clause.
    """
    n, m = phi.num_vars, phi.num_clauses
    if n < 1 or m < 1:
        raise InputError("the gadget needs at least one variable and one clause")
    x0 = ["x%d_0" % i for i in range(1, n + 1)]
    x1 = ["x%d_1" % i for i in range(1, n + 1)]
    states = ["q_s", "q_ns"] + [s for pair in zip(x0, x1) for s in pair]
    alphabet = [_sym(i, j) for i in range(1, n + 2) for j in range(1, m + 1)]
    trans = []
    for sym in alphabet:
        trans.append(("q_s", sym, "q_s"))
        trans.append(("q_ns", sym, "q_ns"))
    for i in range(1, n + 1):
        cl_pos = phi.clauses_with(i)
        cl_neg = phi.clauses_with(-i)
        for j in range(1, m + 1):
            # unset bit i: flip up on its own track, rewinding the lower bits
            trans.append((x0[i - 1], _sym(i, j), x1[i - 1]))
            for jj in range(1, i):
                trans.append((x0[i - 1], _sym(jj, j), x0[i - 1]))
                trans.append((x0[i - 1], _sym(i, j), x0[jj - 1]))
            for jj in range(i + 1, n + 2):
                trans.append((x0[i - 1], _sym(jj, j), "q_ns"))
            if j - 1 in cl_neg:
                for jj in range(1, n + 2):
                    trans.append((x0[i - 1], _sym(jj, j), "q_ns"))
            # set bit i: survives lower tracks, escapes on satisfied clauses
            trans.append((x1[i - 1], _sym(i, j), "q_ns"))
            for jj in range(1, i):
                trans.append((x1[i - 1], _sym(jj, j), x1[i - 1]))
            if j - 1 in cl_pos:
                for jj in range(1, n + 2):
                    trans.append((x1[i - 1], _sym(jj, j), "q_ns"))
    nfa = Nfa(states, alphabet, trans, ["q_s"] + x0)
    return CsoInstance(nfa=nfa, secret=frozenset(["q_s"]),
                       nonsecret=frozenset(states) - {"q_s"},
                       omap=ObservationMap.all_of(nfa),
                       meta={"family": "sat", "num_vars": n, "num_clauses": m})


def zimin_indices(n):
    """Track indices of the counter-driving word of length 2^n - 1.

    The l-th element (1-based) is one plus the number of trailing zeros of
    l; equivalently the recursive index pattern Z_i = Z_{i-1} . i . Z_{i-1}.
    """
    if not 1 <= n <= 30:
        raise InputError("n must be between 1 and 30")
    return [((l & -l).bit_length() - 1) + 1 for l in range(1, 2 ** n)]


def canonical_violating_word(phi):
    """The deterministic secret-revealing word of length 2^n, or None.

    Walks the assignment counter 0 .. 2^n - 1; at each step the track index
    is forced and the clause component is the lowest-index clause the
    current assignment leaves unsatisfied.  The final symbol pairs the
    overflow track with a clause containing no positive literal.  Returns
    None iff some assignment along the walk satisfies the formula.
    """
    n, m = phi.num_vars, phi.num_clauses
    if n < 1 or m < 1:
        raise InputError("the gadget needs at least one variable and one clause")
    bits = [0] * n
    word = []
    for l in range(2 ** n):
        unsat = next((j for j, c in enumerate(phi.clauses)
                      if not any((lit > 0) == bool(bits[abs(lit) - 1]) for lit in c)),
                     None)
        if unsat is None:
            return None  # satisfying assignment encountered
        if l == 2 ** n - 1:
            break
        t = ((l + 1) & -(l + 1)).bit_length()  # forced track: ruler sequence
        word.append(_sym(t, unsat + 1))
        for i in range(t - 1):
            bits[i] = 0
        bits[t - 1] = 1
    final = next(j for j, c in enumerate(phi.clauses)
                 if not any(lit > 0 for lit in c))
    word.append(_sym(n + 1, final + 1))
    return tuple(word)


# -- 3-coloring -> CSO --------------------------------------------------

COLORS = ("a", "b", "c")


def coloring_to_cso(g):
    """CSO instance that is opaque iff the graph is NOT 3-colorable.

    4n-1 states: a main chain q1..qn feeding a terminal secret state s that
    every length-n word reaches, a non-secret all-accepting loop state f,
    and three countdown ladders (one per color) of length n-1.  An edge
    (i, j) sends q_i into the ladder of the color read at position i at
    height j-i; the ladder ticks down once per symbol and enters f exactly
    when position j repeats that color, i.e. when the coloring is improper.
    12n + 3m - 12 transitions.
    """
    n, m = g.num_vertices, g.num_edges
    if n < 2:
        raise InputError("the gadget needs at least two vertices")
    chain = ["q%d" % i for i in range(1, n + 1)]
    ladders = {x: ["%s%d" % (x, d) for d in range(1, n)] for x in COLORS}
    states = chain + [s for x in COLORS for s in ladders[x]] + ["s", "f"]
    trans = []
    for sym in COLORS:
        for i in range(n - 1):
            trans.append((chain[i], sym, chain[i + 1]))
        trans.append((chain[n - 1], sym, "s"))
        trans.append(("f", sym, "f"))
        for x in COLORS:
            for d in range(2, n):
                trans.append((ladders[x][d - 1], sym, ladders[x][d - 2]))
    for x in COLORS:
        trans.append((ladders[x][0], x, "f"))
    for i, j in g.edges:
        for x in COLORS:
            trans.append((chain[i - 1], x, ladders[x][j - i - 1]))
    nfa = Nfa(states, COLORS, trans, [chain[0]])
    return CsoInstance(nfa=nfa, secret=frozenset(["s"]),
                       nonsecret=frozenset(states) - {"s"},
                       omap=ObservationMap.all_of(nfa),
                       meta={"family": "coloring", "num_vertices": n,
                             "num_edges": m})


# -- instance shape detection -------------------------------------------


def _single_secret(inst):
    if len(inst.secret) != 1:
        raise InputError("expected a single secret state")
    return next(iter(inst.secret))


def _secret_shape(inst):
    """Classify the instance: "selfloop" (SAT-style secret sink with full
    self-loops) or "deadend" (coloring-style secret with no outgoing
    transitions)."""
    nfa = inst.nfa
    q = nfa.state_index(_single_secret(inst))
    row = nfa._succ[q]
    if all(r == 1 << q for r in row):
        return "selfloop"
    if all(r == 0 for r in row):
        return "deadend"
    raise InputError("unrecognized secret-state shape")


# -- CSO -> other notions -----------------------------------------------


def cso_to_lbo(inst):
    """LBO query equi-opaque with the CSO instance.

    Secret language: words reaching the secret state; non-secret language:
    words reaching a non-secret state.  For the self-loop (SAT) shape the
    secret language is taken from the secret initial state alone, which
    makes it all of Sigma*.
    """
    nfa = inst.nfa
    qs = _single_secret(inst)
    shape = _secret_shape(inst)
    others = [s for s in nfa.states if s != qs]
    if shape == "selfloop":
        if not nfa.initial >> nfa.state_index(qs) & 1:
            raise InputError("self-loop secret state must be initial")
        secret_lang = nfa.with_marking(
            initial=[qs], accepting=[qs])
        nonsecret_lang = nfa.with_marking(
            initial=[s for s in nfa.states_in(nfa.initial) if s != qs],
            accepting=others)
    else:
        secret_lang = nfa.with_marking(accepting=[qs])
        nonsecret_lang = nfa.with_marking(accepting=others)
    return LboQuery(secret_lang, nonsecret_lang)


def cso_to_iso_direct(inst):
    """ISO query on the same automaton: secret initial = the secret state."""
    nfa = inst.nfa
    qs = _single_secret(inst)
    if _secret_shape(inst) != "selfloop":
        raise InputError("direct ISO rewrite needs the self-loop secret shape")
    if not nfa.initial >> nfa.state_index(qs) & 1:
        raise InputError("self-loop secret state must be initial")
    i_ns = [s for s in nfa.states_in(nfa.initial) if s != qs]
    return nfa, IsoQuery([qs], i_ns)


def cso_to_iso_split(inst):
    """ISO query on a copy-extended automaton (dead-end secret shape).

    Adds a primed copy of the main chain with every transition that does
    not enter the secret state; the original chain head is the secret
    initial state, the primed head the non-secret one.
    """
    nfa = inst.nfa
    qs = _single_secret(inst)
    if _secret_shape(inst) != "deadend":
        raise InputError("split ISO rewrite needs the dead-end secret shape")
    heads = nfa.states_in(nfa.initial)
    if len(heads) != 1:
        raise InputError("dead-end instance must have a single initial state")
    head = heads[0]
    chain = [s for s in nfa.states if s.startswith("q") and s[1:].isdigit()]
    if head not in chain:
        raise InputError("initial state is not on the main chain")
    primed = {s: s + "'" for s in chain}
    states = list(nfa.states) + [primed[s] for s in chain]
    trans = list(nfa.transitions())
    for src, sym, dst in nfa.transitions():
        if src in primed and dst != qs:
            # chain-internal moves stay inside the copy so it cannot reach qs
            trans.append((primed[src], sym, primed.get(dst, dst)))
    out = Nfa(states, nfa.alphabet, trans, [head, primed[head]],
              nfa.states_in(nfa.accepting))
    return out, IsoQuery([head], [primed[head]])


def iso_to_ifo(nfa, query):
    """IFO query equi-opaque with an ISO instance from either family."""
    i_s = sorted(query.secret_initial)
    i_ns = sorted(query.nonsecret_initial)
    if len(i_s) != 1:
        raise InputError("expected a single secret initial state")
    qs_idx = nfa.state_index(i_s[0])
    if all(r == 1 << qs_idx for r in nfa._succ[qs_idx]):
        # SAT family: every state accepting, non-secret pairs a full product
        out = nfa.with_marking(accepting=nfa.states)
        pairs_ns = [(q0, f) for q0 in i_ns for f in nfa.states]
        return out, IfoQuery([(i_s[0], i_s[0])], pairs_ns)
    seen_s = reachable(nfa, 1 << qs_idx)
    # the copy-extended chain adds a second dead state, unreachable from I_S
    dead = [s for i, s in enumerate(nfa.states)
            if all(r == 0 for r in nfa._succ[i]) and seen_s >> i & 1]
    loops = [s for i, s in enumerate(nfa.states)
             if all(r == 1 << i for r in nfa._succ[i])]
    if len(dead) != 1 or len(loops) != 1 or len(i_ns) != 1:
        raise InputError("unrecognized ISO instance shape")
    out = nfa.with_marking(accepting=[dead[0], loops[0]])
    return out, IfoQuery([(i_s[0], dead[0])], [(i_ns[0], loops[0])])


def cso_to_universality(inst):
    """Universality rewrite: the secret state rejects, everything else accepts."""
    nfa = inst.nfa
    qs = _single_secret(inst)
    return nfa.with_marking(accepting=[s for s in nfa.states if s != qs])
