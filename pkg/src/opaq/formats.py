"""Line-oriented text formats: NFA documents, DIMACS CNF, edge lists.

NFA document layout (one section per line, `#` starts a comment):

    states: q1 q2 ...
    alphabet: a b ...
    unobservable: u ...            # optional
    initial: q1 ...
    accepting: ...                 # optional
    secret-states: ...             # optional opacity annotations
    nonsecret-states: ...
    secret-initial: ...
    nonsecret-initial: ...
    secret-pairs: q:f ...          # tokens are initial:accepting pairs
    nonsecret-pairs: ...
    trans:
    src sym dst                    # one triple per line

Parsing and serialization round-trip up to whitespace and ordering.
"""

from dataclasses import dataclass, field
from typing import Optional

from .errors import ParseError
from .nfa import Nfa
from .observe import ObservationMap
from .reductions import CnfFormula, ColorGraph

_SECTIONS = ("states", "alphabet", "unobservable", "initial", "accepting",
             "secret-states", "nonsecret-states", "secret-initial",
             "nonsecret-initial", "secret-pairs", "nonsecret-pairs")


@dataclass
class Annotations:
    """Opacity annotations carried alongside an Nfa in a document."""

    unobservable: frozenset = frozenset()
    secret_states: Optional[frozenset] = None
    nonsecret_states: Optional[frozenset] = None
    secret_initial: Optional[frozenset] = None
    nonsecret_initial: Optional[frozenset] = None
    secret_pairs: Optional[frozenset] = None
    nonsecret_pairs: Optional[frozenset] = None

    def omap(self, nfa):
        return ObservationMap.hiding(nfa, self.unobservable)


def _strip(line):
    return line.split("#", 1)[0].strip()


def parse_nfa(text):
    """Parse an NFA document; returns (Nfa, Annotations)."""
    sections = {}
    trans = []
    in_trans = False
    trans_line = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if not line:
            continue
        if in_trans:
            parts = line.split()
            if len(parts) != 3:
                raise ParseError("transition needs exactly 'src sym dst'", lineno)
            trans.append((tuple(parts), lineno))
            continue
        if line == "trans:":
            in_trans = True
            trans_line = lineno
            continue
        if ":" not in line:
            raise ParseError("expected a 'section:' directive", lineno)
        name, _, rest = line.partition(":")
        name = name.strip()
        if name not in _SECTIONS:
            raise ParseError("unknown directive %r" % name, lineno)
        if name in sections:
            raise ParseError("duplicate section %r" % name, lineno)
        sections[name] = (rest.split(), lineno)
    for required in ("states", "alphabet", "initial"):
        if required not in sections:
            raise ParseError("missing section %r" % required)
    if not in_trans:
        raise ParseError("missing 'trans:' section")

    states, states_line = sections["states"]
    alphabet, alpha_line = sections["alphabet"]
    if len(set(states)) != len(states):
        raise ParseError("duplicate state name", states_line)
    if len(set(alphabet)) != len(alphabet):
        raise ParseError("duplicate symbol name", alpha_line)
    state_set, sym_set = set(states), set(alphabet)

    def known_states(name):
        if name not in sections:
            return None
        toks, lineno = sections[name]
        for t in toks:
            if t not in state_set:
                raise ParseError("undeclared state %r in %s" % (t, name), lineno)
        return frozenset(toks)

    def known_pairs(name):
        if name not in sections:
            return None
        toks, lineno = sections[name]
        out = []
        for t in toks:
            if t.count(":") != 1:
                raise ParseError("pair token %r is not 'initial:accepting'" % t,
                                 lineno)
            q0, qf = t.split(":")
            for s in (q0, qf):
                if s not in state_set:
                    raise ParseError("undeclared state %r in %s" % (s, name),
                                     lineno)
            out.append((q0, qf))
        return frozenset(out)

    for name in ("initial", "accepting"):
        if name in sections:
            toks, lineno = sections[name]
            for t in toks:
                if t not in state_set:
                    raise ParseError("undeclared state %r in %s" % (t, name),
                                     lineno)

    for (src, sym, dst), lineno in trans:
        if src not in state_set:
            raise ParseError("undeclared state %r in transition" % src, lineno)
        if dst not in state_set:
            raise ParseError("undeclared state %r in transition" % dst, lineno)
        if sym not in sym_set:
            raise ParseError("undeclared symbol %r in transition" % sym, lineno)

    unobs, lineno = sections.get("unobservable", ((), None))
    for t in unobs:
        if t not in sym_set:
            raise ParseError("undeclared symbol %r in unobservable" % t, lineno)

    def overlap(a, b, what, lineno):
        if a and b and a & b:
            raise ParseError("secret and non-secret %s overlap" % what, lineno)

    ann = Annotations(
        unobservable=frozenset(unobs),
        secret_states=known_states("secret-states"),
        nonsecret_states=known_states("nonsecret-states"),
        secret_initial=known_states("secret-initial"),
        nonsecret_initial=known_states("nonsecret-initial"),
        secret_pairs=known_pairs("secret-pairs"),
        nonsecret_pairs=known_pairs("nonsecret-pairs"),
    )
    overlap(ann.secret_states, ann.nonsecret_states, "states",
            sections.get("nonsecret-states", ((), None))[1])
    overlap(ann.secret_initial, ann.nonsecret_initial, "initial states",
            sections.get("nonsecret-initial", ((), None))[1])
    overlap(ann.secret_pairs, ann.nonsecret_pairs, "pairs",
            sections.get("nonsecret-pairs", ((), None))[1])

    nfa = Nfa(states, alphabet, [t for t, _ in trans],
              sections["initial"][0], sections.get("accepting", ((), None))[0])
    return nfa, ann


def serialize_nfa(nfa, annotations=None):
    """Serialize to the document format; ordering follows the nfa's indices."""
    ann = annotations or Annotations()
    lines = [
        "states: " + " ".join(nfa.states),
        "alphabet: " + " ".join(nfa.alphabet),
    ]
    if ann.unobservable:
        lines.append("unobservable: "
                     + " ".join(a for a in nfa.alphabet if a in ann.unobservable))
    lines.append("initial: " + " ".join(nfa.states_in(nfa.initial)))
    if nfa.accepting:
        lines.append("accepting: " + " ".join(nfa.states_in(nfa.accepting)))

    def states_line(label, names):
        if names is not None:
            lines.append("%s: %s" % (label,
                                     " ".join(s for s in nfa.states if s in names)))

    states_line("secret-states", ann.secret_states)
    states_line("nonsecret-states", ann.nonsecret_states)
    states_line("secret-initial", ann.secret_initial)
    states_line("nonsecret-initial", ann.nonsecret_initial)
    for label, pairs in (("secret-pairs", ann.secret_pairs),
                        ("nonsecret-pairs", ann.nonsecret_pairs)):
        if pairs is not None:
            key = lambda p: (nfa.state_index(p[0]), nfa.state_index(p[1]))
            lines.append("%s: %s" % (label, " ".join(
                "%s:%s" % p for p in sorted(pairs, key=key))))
    lines.append("trans:")
    lines.extend("%s %s %s" % t for t in nfa.transitions())
    return "\n".join(lines) + "\n"


def parse_dimacs_cnf(text):
    """Standard DIMACS CNF: header 'p cnf n m', clauses terminated by 0."""
    header = None
    lits = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if header is not None:
                raise ParseError("duplicate header", lineno)
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError("malformed header %r" % line, lineno)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ParseError("malformed header %r" % line, lineno) from None
            continue
        if header is None:
            raise ParseError("clause before 'p cnf' header", lineno)
        try:
            lits.extend(int(t) for t in line.split())
        except ValueError:
            raise ParseError("malformed clause line %r" % line, lineno) from None
    if header is None:
        raise ParseError("missing 'p cnf' header")
    n, m = header
    clauses = []
    cur = []
    for lit in lits:
        if lit == 0:
            clauses.append(cur)
            cur = []
        elif abs(lit) > n:
            raise ParseError("literal %d out of range 1..%d" % (lit, n))
        else:
            cur.append(lit)
    if cur:
        raise ParseError("last clause not terminated by 0")
    if len(clauses) != m:
        raise ParseError("header declares %d clauses, found %d"
                         % (m, len(clauses)))
    return CnfFormula(n, clauses)


def serialize_dimacs_cnf(phi):
    lines = ["p cnf %d %d" % (phi.num_vars, phi.num_clauses)]
    lines.extend(" ".join(str(l) for l in sorted(c, key=abs)) + " 0"
                 for c in phi.clauses)
    return "\n".join(lines) + "\n"


def parse_graph(text):
    """DIMACS-like edge list: header 'p edge n m', lines 'e i j'."""
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None:
                raise ParseError("duplicate header", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError("malformed header %r" % line, lineno)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ParseError("malformed header %r" % line, lineno) from None
            continue
        if parts[0] == "e":
            if header is None:
                raise ParseError("edge before 'p edge' header", lineno)
            if len(parts) != 3:
                raise ParseError("edge line needs 'e i j'", lineno)
            try:
                i, j = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError("malformed edge line %r" % line, lineno) from None
            n = header[0]
            if i == j:
                raise ParseError("self-loop edge (%d, %d)" % (i, j), lineno)
            if not (1 <= i <= n and 1 <= j <= n):
                raise ParseError("edge (%d, %d) out of range" % (i, j), lineno)
            e = (min(i, j), max(i, j))
            if e in edges:
                raise ParseError("duplicate edge (%d, %d)" % e, lineno)
            edges.append(e)
            continue
        raise ParseError("unknown directive %r" % parts[0], lineno)
    if header is None:
        raise ParseError("missing 'p edge' header")
    n, m = header
    if len(edges) != m:
        raise ParseError("header declares %d edges, found %d" % (m, len(edges)))
    return ColorGraph(n, edges)


def serialize_graph(g):
    lines = ["p edge %d %d" % (g.num_vertices, g.num_edges)]
    lines.extend("e %d %d" % e for e in g.edges)
    return "\n".join(lines) + "\n"
