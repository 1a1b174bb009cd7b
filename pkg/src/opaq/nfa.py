"""Core NFA data model and execution semantics.

States and symbols are interned strings mapped to dense indices, so that a
subset of states is just an int used as a bit vector (bit i set <=> state i
in the subset).  Subset construction dominates everything downstream, which
is why estimates are plain ints rather than wrapped objects.
"""

from .errors import InputError

# A state estimate is an int bitmask over a particular Nfa's states; the
# empty estimate is 0.  A word is a tuple of symbol indices.
StateEstimate = int


class Nfa:
    """Immutable nondeterministic finite automaton with multiple initial states.

    DFAs are a property of an Nfa, not a separate type.  The transition
    relation is stored per (state, symbol) for O(1) successor lookup;
    duplicate transitions in the input are deduplicated silently.
    """

    def __init__(self, states, alphabet, transitions, initial, accepting=()):
        self.states = tuple(states)
        self.alphabet = tuple(alphabet)
        if len(set(self.states)) != len(self.states):
            raise InputError("duplicate state names")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise InputError("duplicate symbol names")
        self._state_idx = {s: i for i, s in enumerate(self.states)}
        self._sym_idx = {a: i for i, a in enumerate(self.alphabet)}
        n, k = len(self.states), len(self.alphabet)
        succ = [[0] * k for _ in range(n)]
        for src, sym, dst in transitions:
            try:
                q = self._state_idx[src]
                a = self._sym_idx[sym]
                r = self._state_idx[dst]
            except KeyError as e:
                raise InputError("transition (%s, %s, %s) uses undeclared name %s"
                                 % (src, sym, dst, e)) from None
            succ[q][a] |= 1 << r
        self._succ = succ
        self.initial = self.mask(initial)
        self.accepting = self.mask(accepting)
        self._succ_flat = None  # lazy cache for the compiled kernel

    # -- name/index plumbing --------------------------------------------

    @property
    def num_states(self):
        return len(self.states)

    @property
    def num_symbols(self):
        return len(self.alphabet)

    def state_index(self, name):
        try:
            return self._state_idx[name]
        except KeyError:
            raise InputError("unknown state %r" % (name,)) from None

    def symbol_index(self, name):
        try:
            return self._sym_idx[name]
        except KeyError:
            raise InputError("unknown symbol %r" % (name,)) from None

    def mask(self, names):
        """Bitmask for a collection of state names."""
        m = 0
        for s in names:
            m |= 1 << self.state_index(s)
        return m

    def states_in(self, mask):
        """State names in a bitmask, in state-index order."""
        return tuple(s for i, s in enumerate(self.states) if mask >> i & 1)

    def word(self, names):
        """Symbol-name sequence -> word (tuple of symbol indices)."""
        return tuple(self.symbol_index(a) for a in names)

    def word_names(self, word):
        return tuple(self.alphabet[a] for a in word)

    def successors(self, state_index, symbol_index):
        return self._succ[state_index][symbol_index]

    def transitions(self):
        """All transitions as (src, sym, dst) name triples, in index order."""
        for q, row in enumerate(self._succ):
            for a, m in enumerate(row):
                while m:
                    r = (m & -m).bit_length() - 1
                    m &= m - 1
                    yield (self.states[q], self.alphabet[a], self.states[r])

    def num_transitions(self):
        return sum(bin(m).count("1") for row in self._succ for m in row)

    def with_marking(self, initial=None, accepting=None):
        """Copy of this automaton with replaced initial and/or accepting sets."""
        out = Nfa.__new__(Nfa)
        out.states = self.states
        out.alphabet = self.alphabet
        out._state_idx = self._state_idx
        out._sym_idx = self._sym_idx
        out._succ = self._succ
        out._succ_flat = self._succ_flat
        out.initial = self.initial if initial is None else self.mask(initial)
        out.accepting = self.accepting if accepting is None else self.mask(accepting)
        return out

    def succ_flat(self):
        """Flattened successor table (state-major) for the compiled kernel."""
        if self._succ_flat is None:
            self._succ_flat = [m for row in self._succ for m in row]
        return self._succ_flat

    def __repr__(self):
        return "<Nfa %d states, %d symbols, %d transitions>" % (
            self.num_states, self.num_symbols, self.num_transitions())


def step(nfa, estimate, symbol):
    """Extended transition function on an estimate and a single symbol."""
    if not 0 <= symbol < nfa.num_symbols:
        raise InputError("symbol index %r out of range" % (symbol,))
    out = 0
    e = estimate
    while e:
        q = (e & -e).bit_length() - 1
        e &= e - 1
        out |= nfa._succ[q][symbol]
    return out


def run(nfa, estimate, word):
    """Left fold of step over a word; run(E, epsilon) = E."""
    for a in word:
        estimate = step(nfa, estimate, a)
    return estimate


def accepts(nfa, word):
    """True iff the word moves some initial state into an accepting state."""
    return run(nfa, nfa.initial, word) & nfa.accepting != 0


def reachable(nfa, from_mask):
    """All states reachable from the given set via any word."""
    seen = from_mask
    frontier = from_mask
    while frontier:
        q = (frontier & -frontier).bit_length() - 1
        frontier &= frontier - 1
        for m in nfa._succ[q]:
            new = m & ~seen
            seen |= new
            frontier |= new
    return seen
