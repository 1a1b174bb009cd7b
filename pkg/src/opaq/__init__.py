"""Opacity verification toolkit for partially observed NFAs."""

from .errors import InputError, ParseError
from .nfa import Nfa, accepts, reachable, run, step
from .observe import (ObservationMap, ObserverGraph, eliminate_unobservable,
                      observer, unobservable_closure)
from .langdec import is_empty, is_equivalent, is_included, is_universal
from .opacity import (CsoQuery, IfoQuery, InsoQuery, IsoQuery, KsoQuery,
                      LboQuery, check, check_cso, check_ifo, check_inso,
                      check_iso, check_kso, check_lbo, pairs_language_nfa,
                      replay_witness)
from .reductions import (CnfFormula, ColorGraph, CsoInstance,
                         canonical_violating_word, coloring_to_cso,
                         cso_to_iso_direct, cso_to_iso_split, cso_to_lbo,
                         cso_to_universality, iso_to_ifo, sat_to_cso,
                         zimin_indices)
from .oracles import coloring_brute, opacity_brute, sat_brute
from .formats import (Annotations, parse_dimacs_cnf, parse_graph, parse_nfa,
                      serialize_dimacs_cnf, serialize_graph, serialize_nfa)
from .kernels import get_backend, have_compiled, set_backend
from .verdict import SearchStats, Verdict

__version__ = "0.1.0"

__all__ = [
    "InputError", "ParseError",
    "Nfa", "accepts", "reachable", "run", "step",
    "ObservationMap", "ObserverGraph", "eliminate_unobservable", "observer",
    "unobservable_closure",
    "is_empty", "is_equivalent", "is_included", "is_universal",
    "CsoQuery", "IsoQuery", "IfoQuery", "KsoQuery", "InsoQuery", "LboQuery",
    "check", "check_cso", "check_iso", "check_ifo", "check_kso", "check_inso",
    "check_lbo", "pairs_language_nfa", "replay_witness",
    "CnfFormula", "ColorGraph", "CsoInstance", "canonical_violating_word",
    "coloring_to_cso", "cso_to_iso_direct", "cso_to_iso_split", "cso_to_lbo",
    "cso_to_universality", "iso_to_ifo", "sat_to_cso", "zimin_indices",
    "sat_brute", "coloring_brute", "opacity_brute",
    "Annotations", "parse_nfa", "serialize_nfa", "parse_dimacs_cnf",
    "serialize_dimacs_cnf", "parse_graph", "serialize_graph",
    "get_backend", "set_backend", "have_compiled",
    "SearchStats", "Verdict",
]
