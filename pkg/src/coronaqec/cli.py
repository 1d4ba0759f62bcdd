"""
Command-line front end.

    coronaqec gen cycle 6 --out c6.txt
    coronaqec qec --family path 4
    coronaqec corona --g complete 2 --h cycle 6 --json
    coronaqec verify --suite formula --json --out report.json

Exit codes: 0 success / all checks pass, 1 a check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import logging
import sys

import numpy as np

from . import report as report_mod
from .catalog import DEFAULT_SEED
from .corona import qec_corona
from .errors import CoronaQecError
from .graphs import FAMILIES, format_edge_list, generate, read_edge_list
from .graphs import distance_matrix
from .qec import qec_direct, verify_stationarity
from .spectral import Tolerances
from .verify import SUITES, RunConfig, run

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _graph_from(spec, path, seed):
    if path:
        return read_edge_list(path)
    if not spec:
        raise InputError("give a family with parameters or an edge-list file")
    family, *params = spec
    return generate(family, *params, seed=seed)


def _tolerances(args) -> Tolerances:
    try:
        return Tolerances(eig_tol=args.tol_eig, group_tol=args.tol_group,
                          main_tol=args.tol_main, qec_match_tol=args.tol_match)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _emit(args, text):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt(x):
    return "absent" if x is None else f"{x:.6f}"


def cmd_gen(args):
    G = generate(args.family, *args.params, seed=args.seed)
    _emit(args, format_edge_list(G))
    return EXIT_OK


def cmd_qec(args):
    G = _graph_from(args.family, args.file, args.seed)
    tols = _tolerances(args)
    D = distance_matrix(G)
    cert = qec_direct(D, tols.eig_tol)
    w = np.linalg.eigvalsh(D)
    result = {
        "schema": f"coronaqec.qec/{report_mod.SCHEMA_VERSION}",
        "graph": str(G),
        "vertex_count": G.vertex_count,
        "qec": cert.value,
        "multiplier": cert.multiplier,
        "witness": cert.witness,
        "stationarity_residual": verify_stationarity(D, cert),
        "delta1": float(w[-1]),
        "delta2": float(w[-2]),
        "qe_class": cert.value <= 1e-8,
    }
    if args.json:
        _emit(args, report_mod.dumps(result))
    else:
        lines = [
            f"graph      {result['graph']} ({G.vertex_count} vertices)",
            f"qec        {cert.value:.6f}",
            f"delta1     {result['delta1']:.6f}",
            f"delta2     {result['delta2']:.6f}",
            f"multiplier {cert.multiplier:.6f}",
            f"residual   {result['stationarity_residual']:.2e}",
            f"qe_class   {result['qe_class']}",
        ]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_corona(args):
    G = _graph_from(args.g, args.g_file, args.seed)
    H = _graph_from(args.h, args.h_file, args.seed)
    tols = _tolerances(args)
    rep = qec_corona(G, H, tols, force_general=args.general)
    d = report_mod.corona_report_dict(rep)
    if args.json:
        _emit(args, report_mod.dumps(d))
    else:
        value = rep.qec_formula if rep.qec_formula is not None else rep.qec_direct
        lines = [
            f"G ⊙ H        {rep.G} ⊙ {rep.H}",
            f"qec          {value:.6f}",
            f"qec(G)       {rep.qec_G:.6f}",
            f"psi^-1       {_fmt(rep.psi_inverse)}  [{rep.profile_kind}]",
            f"gamma2       {_fmt(rep.gamma.gamma2)}  ({rep.gamma.gamma2_reason})",
            f"gamma3       {_fmt(rep.gamma.gamma3)}",
            f"assumption   {'ok' if rep.assumption_ok else 'violated'} (margin {rep.assumption_margin:.3e})",
            f"formula      {_fmt(rep.qec_formula)}  winner={rep.winner}",
            f"direct       {rep.qec_direct:.6f}",
            f"delta1       {rep.delta1:.6f}",
            f"delta2       {rep.delta2:.6f}",
            f"case         {rep.case_label}",
            f"qe_class     {rep.qe_class} (direct {rep.qe_class_direct})",
        ]
        _emit(args, "\n".join(lines) + "\n")
    if rep.qec_formula is not None and rep.formula_error > tols.qec_match_tol:
        return EXIT_FAIL
    return EXIT_OK


def cmd_verify(args):
    config = RunConfig(tolerances=_tolerances(args), seed=args.seed,
                       output="json" if args.json else "table", out_path=args.out)
    if args.g_family:
        config.g_families = tuple(args.g_family)
    if args.h_family:
        config.h_families = tuple(args.h_family)
    suites = args.suite or list(SUITES)
    result = run(config, suites)
    if args.json:
        _emit(args, report_mod.dumps(result))
    else:
        lines = [f"{result['pair_count']} (G, H) pairs, seed {result['seed']}"]
        for name, s in result["suites"].items():
            summ = s["summary"]
            status = "PASS" if summ["passed"] else "FAIL"
            lines.append(f"{status}  {name:<13} checks={summ['checks']:<5} failures={summ['failures']:<4}"
                         f" margin_max={summ['margin_max']}")
            for r in [r for r in s["rows"] if not r["passed"]][:20]:
                lines.append(f"      failed {r['check']} G={r['G']} H={r['H']} margin={r['margin']}")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if result["passed"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coronaqec",
                                     description="Quadratic embedding constants of graphs and corona products.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for random_regular graphs")
    common.add_argument("--json", action="store_true", help="emit JSON instead of a table")
    common.add_argument("--out", help="write output to this file")
    d = Tolerances()
    common.add_argument("--tol-eig", type=float, default=d.eig_tol)
    common.add_argument("--tol-group", type=float, default=d.group_tol)
    common.add_argument("--tol-main", type=float, default=d.main_tol)
    common.add_argument("--tol-match", type=float, default=d.qec_match_tol)

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="write a generated graph as an edge list")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("params", nargs="*", type=int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("qec", parents=[common], help="QEC of a single graph")
    p.add_argument("--family", nargs="+", metavar="ARG", help="family name followed by its parameters")
    p.add_argument("--file", help="edge-list file")
    p.set_defaults(func=cmd_qec)

    p = sub.add_parser("corona", parents=[common], help="corona formula report for G ⊙ H")
    p.add_argument("--g", nargs="+", metavar="ARG", help="family and parameters of G")
    p.add_argument("--h", nargs="+", metavar="ARG", help="family and parameters of H")
    p.add_argument("--g-file", help="edge-list file for G")
    p.add_argument("--h-file", help="edge-list file for H")
    p.add_argument("--general", action="store_true", help="use the general psi route even for regular H")
    p.set_defaults(func=cmd_corona)

    p = sub.add_parser("verify", parents=[common], help="run verification suites over the catalog")
    p.add_argument("--suite", action="append", choices=SUITES, help="suite to run (repeatable; default all)")
    p.add_argument("--g-family", action="append", help="catalog spec for G, e.g. path:2-6 (repeatable)")
    p.add_argument("--h-family", action="append", help="catalog spec for H (repeatable)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (InputError, CoronaQecError, OSError) as exc:
        print(f"coronaqec: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
