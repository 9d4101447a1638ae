"""Command-line entry point: generation, labeling, lifting, verification,
search, isomorphism, sequencing, the ladder explorer, and the acceptance
suite.  Every verb is a thin adapter over the library; identical invocations
produce identical bytes."""

from __future__ import annotations

import argparse
import os
import sys

from . import acceptance
from .constructions import (label_chorded_cycle, label_double_cycle, label_infinity_c3,
                            label_infinity_even, label_infinity_odd, label_propeller,
                            label_windmill)
from .digraph import (FamilySpec, format_digraph_text, isomorphic, line_digraph,
                      parse_digraph_text, to_dot)
from .errors import DnaGraphError, InvalidParameterError
from .labeling import (find_full_violation, find_quasi_violation, format_labeling,
                       parse_labeling)
from .lift import lift_m
from .search import SAT, SearchConfig, explore_conjecture, find_labeling
from .sequencing import (count_eulerian_paths, eulerian_path, hamiltonian_via_line,
                         pevzner_arc_labels, sample_pevzner_graph, spell_eulerian,
                         to_nucleotides)

CONSTRUCTIONS = {
    "chorded-cycle": (("n",), lambda a: label_chorded_cycle(a.n)),
    "infinity-even": (("n", "p"), lambda a: label_infinity_even(a.n, a.p)),
    "infinity-odd": (("n", "p"), lambda a: label_infinity_odd(a.n, a.p)),
    "infinity-c3": (("p",), lambda a: label_infinity_c3(a.p)),
    "double-cycle": (("n",), lambda a: label_double_cycle(a.n)),
    "windmill": (("n",), lambda a: label_windmill(a.n)),
    "propeller3": (("n", "p", "q"), lambda a: label_propeller(a.n, a.p, a.q)),
}


def _default_budget() -> int:
    return int(os.environ.get("DNAGRAPH_BUDGET", 10 ** 8))


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _emit(text: str, path: str | None, out) -> None:
    if path is None:
        out.write(text)
    else:
        _write(path, text)


def _load_pair(args):
    d = parse_digraph_text(_read(args.digraph))
    lab = parse_labeling(_read(args.labeling))
    return d, lab


def _cmd_gen(args, out) -> int:
    spec = FamilySpec(args.family, args.n, args.p, args.q)
    d = spec.build()
    _emit(format_digraph_text(d), args.out, out)
    if args.dot:
        _write(args.dot, to_dot(d))
    return 0


def _cmd_label(args, out) -> int:
    required, builder = CONSTRUCTIONS[args.construction]
    missing = [name for name in required if getattr(args, name) is None]
    if missing:
        raise InvalidParameterError(
            f"--construction {args.construction} needs --" + " --".join(missing))
    result = builder(args)
    if args.out_digraph:
        _write(args.out_digraph, format_digraph_text(result.digraph))
    if args.dot:
        _write(args.dot, to_dot(result.digraph, result.labeling))
    _emit(format_labeling(result.labeling), args.out_labeling, out)
    return 0


def _cmd_lift(args, out) -> int:
    d, lab = _load_pair(args)
    res = lift_m(d, lab, args.m)
    if args.out_digraph:
        _write(args.out_digraph, format_digraph_text(res.result_digraph))
    _emit(format_labeling(res.result_labeling), args.out_labeling, out)
    return 0


def _cmd_verify(args, out) -> int:
    d, lab = _load_pair(args)
    if args.mode == "quasi":
        bad = find_quasi_violation(d, lab)
    elif args.mode == "full":
        bad = find_full_violation(d, lab)
    else:  # dna
        bad = find_full_violation(d, lab)
        if bad is None and lab.alpha > 4:
            bad = f"alphabet size {lab.alpha} exceeds the four nucleotides"
    if bad is None:
        out.write(f"ok: labeling is {args.mode}-valid\n")
        return 0
    out.write(f"violation: {bad}\n")
    return 1


def _cmd_search(args, out) -> int:
    d = parse_digraph_text(_read(args.digraph))
    cfg = SearchConfig(args.alpha, args.k, args.mode, args.budget, args.order)
    outcome = find_labeling(d, cfg)
    out.write(f"{d.vertex_count} {args.alpha} {args.k} {outcome.verdict} {outcome.nodes_explored}\n")
    if outcome.verdict == SAT and args.out_labeling:
        _write(args.out_labeling, format_labeling(outcome.certificate))
    return 0


def _cmd_iso(args, out) -> int:
    a = parse_digraph_text(_read(args.first))
    b = parse_digraph_text(_read(args.second))
    result = isomorphic(a, b, size_cap=args.cap)
    out.write("isomorphic\n" if result else "not isomorphic\n")
    return 0 if result else 1


def _cmd_sequence(args, out) -> int:
    if args.demo:
        d, lab = sample_pevzner_graph()
    else:
        if not (args.digraph and args.labeling):
            out.write("sequence needs --demo or both --digraph and --labeling\n")
            return 2
        d, lab = _load_pair(args)
    names = to_nucleotides(lab)
    out.write("vertices:\n")
    for v in d.vertices:
        out.write(f"  {v}\t{names[v]}\n")
    out.write("arcs:\n")
    for arc, merged in pevzner_arc_labels(d, lab).items():
        out.write(f"  {arc[0]} {arc[1]}\t{merged}\n")
    path = eulerian_path(d, args.start)
    if path is None:
        out.write("no eulerian path\n")
        return 1
    out.write("eulerian path: " + " ".join(f"{t}>{h}" for t, h in path) + "\n")
    spectrum = hamiltonian_via_line(d, lab, args.start)
    out.write("hamiltonian path: " + " ".join(spectrum.source_path) + "\n")
    out.write(f"spectrum (eulerian): {spell_eulerian(d, lab, path)}\n")
    out.write(f"spectrum (line digraph): {spectrum.sequence}\n")
    paths = count_eulerian_paths(d, args.start)
    out.write(f"distinct eulerian paths from this start: {paths}\n")
    if args.dot:
        _write(args.dot, to_dot(line_digraph(d)))
    return 0


def _cmd_conjecture(args, out) -> int:
    rows = explore_conjecture(range(args.n_min, args.n_max + 1), node_budget=args.budget)
    out.write(f"{'n':>3} {'alpha':>5} {'k':>3} {'verdict':<15} {'nodes':>10}\n")
    for row in rows:
        out.write(f"{row.n:>3} {row.alpha:>5} {row.k:>3} {row.verdict:<15} {row.nodes:>10}\n")
    return 0


def _cmd_acceptance(args, out) -> int:
    ok = acceptance.run_all(write=lambda line: out.write(line + "\n"), only=args.only)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dnagraph",
        description="construct, label, lift, verify, and search DNA-graph families",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    gen = sub.add_parser("gen", help="generate a digraph family member")
    gen.add_argument("--family", required=True, choices=FamilySpec.KINDS)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--p", type=int)
    gen.add_argument("--q", type=int)
    gen.add_argument("--out", help="write digraph text here instead of stdout")
    gen.add_argument("--dot", help="also write a DOT rendering")
    gen.set_defaults(func=_cmd_gen)

    lab = sub.add_parser("label", help="emit a catalogued quasi-labeling")
    lab.add_argument("--construction", required=True, choices=sorted(CONSTRUCTIONS))
    lab.add_argument("--n", type=int)
    lab.add_argument("--p", type=int)
    lab.add_argument("--q", type=int)
    lab.add_argument("--out-digraph")
    lab.add_argument("--out-labeling")
    lab.add_argument("--dot")
    lab.set_defaults(func=_cmd_label)

    lift = sub.add_parser("lift", help="lift a quasi-labeling through line digraphs")
    lift.add_argument("--m", type=int, required=True)
    lift.add_argument("--digraph", required=True)
    lift.add_argument("--labeling", required=True)
    lift.add_argument("--out-digraph")
    lift.add_argument("--out-labeling")
    lift.set_defaults(func=_cmd_lift)

    ver = sub.add_parser("verify", help="verify a labeling against a digraph")
    ver.add_argument("--mode", choices=("quasi", "full", "dna"), default="quasi")
    ver.add_argument("--digraph", required=True)
    ver.add_argument("--labeling", required=True)
    ver.set_defaults(func=_cmd_verify)

    sea = sub.add_parser("search", help="backtracking labeling oracle")
    sea.add_argument("--alpha", type=int, required=True)
    sea.add_argument("--k", type=int, required=True)
    sea.add_argument("--mode", choices=("quasi", "full"), default="quasi")
    sea.add_argument("--budget", type=int, default=_default_budget())
    sea.add_argument("--order", choices=("dfs", "given"), default="dfs")
    sea.add_argument("--digraph", required=True)
    sea.add_argument("--out-labeling")
    sea.set_defaults(func=_cmd_search)

    iso = sub.add_parser("iso", help="decide digraph isomorphism")
    iso.add_argument("--first", required=True)
    iso.add_argument("--second", required=True)
    iso.add_argument("--cap", type=int, default=12)
    iso.set_defaults(func=_cmd_iso)

    seq = sub.add_parser("sequence", help="spell the spectrum of a labeled digraph")
    seq.add_argument("--digraph")
    seq.add_argument("--labeling")
    seq.add_argument("--start")
    seq.add_argument("--dot")
    seq.add_argument("--demo", action="store_true", help="use the bundled TACGACTA instance")
    seq.set_defaults(func=_cmd_sequence)

    con = sub.add_parser("conjecture", help="probe ladders for full labelings")
    con.add_argument("--n-min", type=int, default=2)
    con.add_argument("--n-max", type=int, default=6)
    con.add_argument("--budget", type=int, default=_default_budget())
    con.set_defaults(func=_cmd_conjecture)

    acc = sub.add_parser("acceptance", help="run the acceptance suite")
    acc.add_argument("--only", help="run a single criterion by identifier")
    acc.set_defaults(func=_cmd_acceptance)

    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except InvalidParameterError as exc:
        out.write(f"error: {exc}\n")
        return 2
    except DnaGraphError as exc:
        out.write(f"error: {exc}\n")
        return 1
    except FileNotFoundError as exc:
        out.write(f"error: {exc}\n")
        return 2
    except ValueError as exc:
        out.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
