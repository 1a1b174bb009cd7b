"""Compare the pure-Python and compiled subset-construction kernels.

Runs check_cso over the unsatisfiable counter family (witness length 2^n)
with each backend and prints a side-by-side table.

Usage: python benchmarks/compare_backends.py [--n-min 4] [--n-max 12]
"""

import argparse
import time

from opaq import kernels
from opaq.bench import unsat_counter_formula
from opaq.opacity import CsoQuery, check_cso
from opaq.reductions import sat_to_cso


def timed(inst):
    t0 = time.perf_counter()
    v = check_cso(inst.nfa, CsoQuery(inst.secret, inst.nonsecret), inst.omap)
    return v, time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-min", type=int, default=4)
    ap.add_argument("--n-max", type=int, default=12)
    args = ap.parse_args()

    backends = ["pure"]
    if kernels.have_compiled():
        backends.append("compiled")
    else:
        print("note: compiled kernel not built, showing pure only")

    print("n\twitness_len\tnodes\t" + "\t".join("%s_s" % b for b in backends)
          + ("\tspeedup" if len(backends) == 2 else ""))
    for n in range(args.n_min, args.n_max + 1):
        inst = sat_to_cso(unsat_counter_formula(n))
        times = []
        verdicts = []
        for b in backends:
            kernels.set_backend(b)
            v, dt = timed(inst)
            verdicts.append(v)
            times.append(dt)
        kernels.set_backend("auto")
        assert all(v.witness == verdicts[0].witness for v in verdicts)
        row = "%d\t%d\t%d\t" % (n, len(verdicts[0].witness),
                                verdicts[0].stats.nodes)
        row += "\t".join("%.4f" % t for t in times)
        if len(times) == 2:
            row += "\t%.1fx" % (times[0] / times[1] if times[1] > 0 else 0.0)
        print(row)


if __name__ == "__main__":
    main()
