"""Projections, elimination of unobservable transitions, and the observer.

The observer is the deterministic estimate-transition graph obtained by
first rewriting unobservable transitions away (so the projection becomes
the identity) and then running the subset construction from the closed
initial estimate.  The empty estimate is never a node; a missing edge
encodes "no continuation".
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from . import kernels
from .errors import InputError
from .nfa import Nfa


@dataclass(frozen=True)
class ObservationMap:
    """Partition of an alphabet into observable and unobservable symbols."""

    observable: frozenset

    @classmethod
    def of(cls, symbols):
        return cls(frozenset(symbols))

    @classmethod
    def all_of(cls, nfa):
        return cls(frozenset(nfa.alphabet))

    @classmethod
    def hiding(cls, nfa, unobservable):
        for a in unobservable:
            nfa.symbol_index(a)  # membership check
        return cls(frozenset(nfa.alphabet) - frozenset(unobservable))

    def validate(self, nfa):
        extra = self.observable - set(nfa.alphabet)
        if extra:
            raise InputError("observable symbols not in alphabet: %s"
                             % " ".join(sorted(extra)))

    def observable_of(self, nfa):
        """Observable symbols in the nfa's alphabet order."""
        return tuple(a for a in nfa.alphabet if a in self.observable)

    def unobservable_of(self, nfa):
        return tuple(a for a in nfa.alphabet if a not in self.observable)

    def project(self, names):
        """Projection of a word of symbol names."""
        return tuple(a for a in names if a in self.observable)


def unobservable_closure(nfa, omap, mask):
    """States reachable from mask via unobservable transitions only."""
    omap.validate(nfa)
    unobs = [nfa.symbol_index(a) for a in omap.unobservable_of(nfa)]
    seen = mask
    frontier = mask
    while frontier:
        q = (frontier & -frontier).bit_length() - 1
        frontier &= frontier - 1
        for a in unobs:
            new = nfa._succ[q][a] & ~seen
            seen |= new
            frontier |= new
    return seen


def eliminate_unobservable(nfa, omap):
    """Rewrite the automaton over the observable alphabet only.

    The result has the same states, and its runs on any observable word v
    reach exactly the states the original reaches via some word w with
    P(w) = v.  Initial states are replaced by their unobservable closure.
    The transition count may grow quadratically; that is accepted.
    """
    omap.validate(nfa)
    gamma = omap.observable_of(nfa)
    closures = [unobservable_closure(nfa, omap, 1 << q)
                for q in range(nfa.num_states)]

    def closure_of(mask):
        out = 0
        while mask:
            q = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            out |= closures[q]
        return out

    out = Nfa.__new__(Nfa)
    out.states = nfa.states
    out.alphabet = gamma
    out._state_idx = nfa._state_idx
    out._sym_idx = {a: i for i, a in enumerate(gamma)}
    gidx = [nfa.symbol_index(a) for a in gamma]
    succ = []
    for q in range(nfa.num_states):
        row = []
        for a in gidx:
            m = 0
            c = closures[q]
            while c:
                p = (c & -c).bit_length() - 1
                c &= c - 1
                m |= nfa._succ[p][a]
            row.append(closure_of(m))
        succ.append(row)
    out._succ = succ
    out.initial = closure_of(nfa.initial)
    out.accepting = nfa.accepting
    out._succ_flat = None
    return out


@dataclass
class ObserverGraph:
    """Reachable deterministic estimate graph of an eliminated automaton.

    nodes[0] is the root (the closed initial estimate); nodes are numbered
    in BFS discovery order with symbols expanded in index order, so
    word_to() yields the shortest, lexicographically least observed word
    reaching a node.
    """

    source: Nfa                      # the eliminated automaton (alphabet = Gamma)
    nodes: List[int]                 # estimate masks; empty estimate excluded
    edges: Dict[Tuple[int, int], int]  # (node index, symbol index) -> node index
    parent: List[int]
    parent_sym: List[int]

    @property
    def root(self):
        return 0

    def node_index(self, mask):
        try:
            return self.nodes.index(mask)
        except ValueError:
            raise KeyError(mask) from None

    def word_to(self, idx):
        """Observed word (symbol indices of source) reaching node idx."""
        return kernels.word_to(self.parent, self.parent_sym, idx)

    def __len__(self):
        return len(self.nodes)


def observer(nfa, omap=None):
    """Observer (projected automaton) of nfa under omap via subset construction."""
    if omap is None:
        omap = ObservationMap.all_of(nfa)
    elim = eliminate_unobservable(nfa, omap)
    if elim.initial == 0:
        raise InputError("observer of an automaton with no initial states")
    nodes, flat, parent, parent_sym, _ = kernels.explore(
        elim, elim.initial, want_edges=True)
    edges = {}
    pos = 0
    for i in range(len(nodes)):
        for a in range(elim.num_symbols):
            j = flat[pos]
            pos += 1
            if j >= 0:
                edges[(i, a)] = j
    return ObserverGraph(source=elim, nodes=nodes, edges=edges,
                         parent=parent, parent_sym=parent_sym)
