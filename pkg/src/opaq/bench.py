"""Scaling-benchmark harness over the hard instance families."""

import random
import time
from dataclasses import dataclass
from typing import List, Optional

from .errors import InputError
from .opacity import CsoQuery, check_cso
from .reductions import CnfFormula, ColorGraph, coloring_to_cso, sat_to_cso

REPORT_HEADER = "n\tverdict\twitness_len\tnodes\tseconds"


@dataclass
class BenchRow:
    n: int
    holds: bool
    witness_len: Optional[int]
    nodes: int
    seconds: float

    def report_line(self):
        return "%d\t%s\t%s\t%d\t%.6f" % (
            self.n, "holds" if self.holds else "fails",
            "-" if self.witness_len is None else self.witness_len,
            self.nodes, self.seconds)


def unsat_counter_formula(n):
    """Fixed unsatisfiable formula over n variables: {x1}, {not x1}, plus
    tautology padding so every variable occurs."""
    clauses = [[1], [-1]] + [[i, -i] for i in range(2, n + 1)]
    return CnfFormula(n, clauses)


def random_graph(n, seed, p=0.5):
    rng = random.Random("%s:%d" % (seed, n))
    edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
             if rng.random() < p]
    return ColorGraph(n, edges)


def bench_instance(inst):
    t0 = time.perf_counter()
    verdict = check_cso(inst.nfa, CsoQuery(inst.secret, inst.nonsecret), inst.omap)
    elapsed = time.perf_counter() - t0
    wlen = None if verdict.holds else len(verdict.witness)
    return verdict, wlen, elapsed


def bench_family(family, n_min, n_max, seed=0):
    """Run check_cso over one instance per n in [n_min, n_max].

    Families: "sat-family" (the fixed unsatisfiable formula, so the
    verdict always fails with a witness of length 2^n) and "col-family"
    (seeded random graphs).  Rows are sorted by n and, timing aside,
    reproducible for a fixed seed.
    """
    if n_min < 1 or n_max < n_min:
        raise InputError("need 1 <= n-min <= n-max")
    rows = []
    for n in range(n_min, n_max + 1):
        if family == "sat-family":
            inst = sat_to_cso(unsat_counter_formula(n))
        elif family == "col-family":
            if n < 2:
                raise InputError("col-family needs n >= 2")
            inst = coloring_to_cso(random_graph(n, seed=seed))
        else:
            raise InputError("unknown family %r" % family)
        verdict, wlen, elapsed = bench_instance(inst)
        rows.append(BenchRow(n=n, holds=verdict.holds, witness_len=wlen,
                             nodes=verdict.stats.nodes, seconds=elapsed))
    return rows


def write_report(rows, path):
    with open(path, "w") as fh:
        fh.write(REPORT_HEADER + "\n")
        for row in rows:
            fh.write(row.report_line() + "\n")
