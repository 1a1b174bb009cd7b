"""Command-line interface.

Exit codes: 0 = property holds / yes, 1 = property fails / no (the
violating word is printed to stdout, one symbol name per token),
2 = usage or input error.
"""

import argparse
import sys

from . import bench as bench_mod
from . import kernels
from .errors import InputError
from .formats import (Annotations, parse_dimacs_cnf, parse_graph, parse_nfa,
                      serialize_nfa)
from .langdec import is_equivalent, is_included, is_universal
from .opacity import (CsoQuery, IfoQuery, InsoQuery, IsoQuery, KsoQuery,
                      LboQuery, check, pairs_language_nfa)
from .oracles import coloring_brute, sat_brute
from .reductions import (CsoInstance, coloring_to_cso, cso_to_iso_direct,
                         cso_to_iso_split, cso_to_lbo, cso_to_universality,
                         iso_to_ifo, sat_to_cso, zimin_indices, _secret_shape)


def _read(path):
    with open(path) as fh:
        return fh.read()


def _need(value, what):
    if value is None:
        raise InputError("input document lacks the %s section(s)" % what)
    return value


def _build_query(notion, nfa, ann, k):
    if notion == "cso":
        return CsoQuery(_need(ann.secret_states, "secret-states"),
                        _need(ann.nonsecret_states, "nonsecret-states"))
    if notion == "kso":
        if k is None:
            raise InputError("kso needs --k")
        return KsoQuery(_need(ann.secret_states, "secret-states"),
                        _need(ann.nonsecret_states, "nonsecret-states"), k)
    if notion == "inso":
        return InsoQuery(_need(ann.secret_states, "secret-states"),
                         _need(ann.nonsecret_states, "nonsecret-states"))
    if notion == "iso":
        return IsoQuery(_need(ann.secret_initial, "secret-initial"),
                        _need(ann.nonsecret_initial, "nonsecret-initial"))
    if notion == "ifo":
        return IfoQuery(_need(ann.secret_pairs, "secret-pairs"),
                        _need(ann.nonsecret_pairs, "nonsecret-pairs"))
    if notion == "lbo":
        sp = _need(ann.secret_pairs, "secret-pairs")
        nsp = _need(ann.nonsecret_pairs, "nonsecret-pairs")
        return LboQuery(pairs_language_nfa(nfa, sp),
                        pairs_language_nfa(nfa, nsp))
    raise InputError("unknown notion %r" % notion)


def _finish(verdict, nfa, args):
    if getattr(args, "report", None):
        row = bench_mod.BenchRow(
            n=nfa.num_states, holds=verdict.holds,
            witness_len=None if verdict.witness is None else len(verdict.witness),
            nodes=verdict.stats.nodes, seconds=verdict.stats.seconds)
        bench_mod.write_report([row], args.report)
    if verdict.holds:
        print("holds", file=sys.stderr)
        return 0
    if verdict.witness is not None:
        print(" ".join(verdict.witness))
    print("fails", file=sys.stderr)
    return 1


def _cmd_check(args):
    nfa, ann = parse_nfa(_read(args.input))
    omap = ann.omap(nfa)
    if args.notion == "universal":
        return _finish(is_universal(nfa), nfa, args)
    if args.notion in ("included", "equivalent"):
        if not args.second:
            raise InputError("%s needs a second automaton (-j FILE)" % args.notion)
        other, _ = parse_nfa(_read(args.second))
        fn = is_included if args.notion == "included" else is_equivalent
        return _finish(fn(nfa, other), nfa, args)
    query = _build_query(args.notion, nfa, ann, args.k)
    if isinstance(query, LboQuery):
        return _finish(check(None, query, omap), nfa, args)
    return _finish(check(nfa, query, omap), nfa, args)


def _cso_instance(nfa, ann):
    return CsoInstance(
        nfa=nfa,
        secret=_need(ann.secret_states, "secret-states"),
        nonsecret=_need(ann.nonsecret_states, "nonsecret-states"),
        omap=ann.omap(nfa))


def _cmd_reduce(args):
    kind = args.kind
    if kind == "sat2cso":
        inst = sat_to_cso(parse_dimacs_cnf(_read(args.input)))
        out = serialize_nfa(inst.nfa, Annotations(
            secret_states=inst.secret, nonsecret_states=inst.nonsecret))
    elif kind == "col2cso":
        inst = coloring_to_cso(parse_graph(_read(args.input)))
        out = serialize_nfa(inst.nfa, Annotations(
            secret_states=inst.secret, nonsecret_states=inst.nonsecret))
    elif kind in ("cso2lbo", "cso2iso", "cso2univ"):
        nfa, ann = parse_nfa(_read(args.input))
        inst = _cso_instance(nfa, ann)
        if kind == "cso2lbo":
            q = cso_to_lbo(inst)
            ls, lns = q.secret_lang, q.nonsecret_lang
            base = nfa.with_marking(
                initial=set(nfa.states_in(nfa.initial))
                | set(nfa.states_in(ls.initial)) | set(nfa.states_in(lns.initial)),
                accepting=nfa.states)
            pairs = lambda lang: frozenset(
                (q0, f) for q0 in lang.states_in(lang.initial)
                for f in lang.states_in(lang.accepting))
            out = serialize_nfa(base, Annotations(
                unobservable=frozenset(ann.unobservable),
                secret_pairs=pairs(ls), nonsecret_pairs=pairs(lns)))
        elif kind == "cso2iso":
            if _secret_shape(inst) == "selfloop":
                out_nfa, q = cso_to_iso_direct(inst)
            else:
                out_nfa, q = cso_to_iso_split(inst)
            out = serialize_nfa(out_nfa, Annotations(
                unobservable=frozenset(ann.unobservable),
                secret_initial=q.secret_initial,
                nonsecret_initial=q.nonsecret_initial))
        else:
            out = serialize_nfa(cso_to_universality(inst), Annotations(
                unobservable=frozenset(ann.unobservable)))
    elif kind == "iso2ifo":
        nfa, ann = parse_nfa(_read(args.input))
        q = IsoQuery(_need(ann.secret_initial, "secret-initial"),
                     _need(ann.nonsecret_initial, "nonsecret-initial"))
        out_nfa, ifo = iso_to_ifo(nfa, q)
        out = serialize_nfa(out_nfa, Annotations(
            unobservable=frozenset(ann.unobservable),
            secret_pairs=ifo.secret_pairs, nonsecret_pairs=ifo.nonsecret_pairs))
    else:
        raise InputError("unknown reduction %r" % kind)
    with open(args.output, "w") as fh:
        fh.write(out)
    return 0


def _cmd_gen(args):
    if args.what == "zimin":
        print(" ".join("a%d" % i for i in zimin_indices(args.n)))
        return 0
    raise InputError("unknown generator %r" % args.what)


def _cmd_oracle(args):
    if args.kind == "sat":
        bits = sat_brute(parse_dimacs_cnf(_read(args.input)))
        if bits is None:
            return 1
        print("".join(str(b) for b in bits))
        return 0
    if args.kind == "col3":
        word = coloring_brute(parse_graph(_read(args.input)))
        if word is None:
            return 1
        print(word)
        return 0
    raise InputError("unknown oracle %r" % args.kind)


def _cmd_bench(args):
    if args.backend != "auto":
        kernels.set_backend(args.backend)
    rows = bench_mod.bench_family(args.family, args.n_min, args.n_max,
                                  seed=args.seed)
    print(bench_mod.REPORT_HEADER)
    for row in rows:
        print(row.report_line())
    if args.report:
        bench_mod.write_report(rows, args.report)
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="opaq",
        description="Opacity and language-decision toolkit for NFAs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="decide an opacity or language property")
    c.add_argument("notion", choices=["cso", "iso", "ifo", "kso", "inso", "lbo",
                                      "universal", "included", "equivalent"])
    c.add_argument("-i", "--input", required=True, help="NFA document")
    c.add_argument("-j", "--second", help="second NFA document")
    c.add_argument("--k", type=int, default=None, help="step bound for kso")
    c.add_argument("--report", help="write a one-row TSV report")
    c.set_defaults(fn=_cmd_check)

    r = sub.add_parser("reduce", help="rewrite an instance into another notion")
    r.add_argument("kind", choices=["sat2cso", "col2cso", "cso2lbo", "cso2iso",
                                    "iso2ifo", "cso2univ"])
    r.add_argument("-i", "--input", required=True)
    r.add_argument("-o", "--output", required=True)
    r.set_defaults(fn=_cmd_reduce)

    g = sub.add_parser("gen", help="generate driver words")
    g.add_argument("what", choices=["zimin"])
    g.add_argument("-n", type=int, required=True)
    g.set_defaults(fn=_cmd_gen)

    o = sub.add_parser("oracle", help="brute-force reference answers")
    o.add_argument("kind", choices=["sat", "col3"])
    o.add_argument("-i", "--input", required=True)
    o.set_defaults(fn=_cmd_oracle)

    b = sub.add_parser("bench", help="scaling benchmark over a hard family")
    b.add_argument("family", choices=["sat-family", "col-family"])
    b.add_argument("--n-min", type=int, required=True)
    b.add_argument("--n-max", type=int, required=True)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--report", help="write the TSV report here")
    b.add_argument("--backend", choices=["auto", "pure", "compiled"],
                   default="auto")
    b.set_defaults(fn=_cmd_bench)
    return p


def cli_main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except (InputError, OSError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


def main():
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
