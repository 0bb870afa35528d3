"""Command-line front end: ``alterna <subcommand> ...``.

Exit codes: 0 on success, 1 when a check fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .coeffs import a_one_param, a_vector, alpha_table, gen_check_C, gen_check_D
from .coxeter import (
    CoxeterMatrixError,
    connected_extension,
    cycle_basis,
    group_order,
    load_matrix,
    parameter_classes,
)
from .heckedihedral import braid_f_expansion, check_dihedral
from .presentations import PRESENTATION_KINDS, present
from .subgroup_rewrite import RewriteError, SchreierSetup, SignCharacter, rs_rewrite, simplify
from .verify import DEFAULT_CORPUS, SUITES, run_suite
from .words import GroupPresentation


class UsageError(Exception):
    pass


def _emit(args, payload, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print(text)


def _add_format(p: argparse.ArgumentParser) -> None:
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="machine-readable output")
    fmt.add_argument("--text", action="store_true", help="human-readable output (default)")


# ---------------------------------------------------------------------------


def cmd_coeffs(args) -> int:
    if args.check_gen:
        if args.max is None or args.max < 0:
            raise UsageError("--check-gen needs --max M with M >= 0")
        reports = [gen_check_C(args.max), gen_check_D(args.max)]
        _emit(args, [r.to_json() for r in reports], "\n".join(str(r) for r in reports))
        return 0 if all(r.ok for r in reports) else 1
    if args.m is None:
        raise UsageError("coeffs needs --m (or --check-gen --max M)")
    if args.alpha:
        if args.m < 0:
            raise UsageError("--m must be nonnegative")
        table = alpha_table(args.m)
        lines = [f"alpha[{k},{l},{lp}] = {c}" for (k, l, lp), c in sorted(table.entries.items())]
        _emit(args, table.to_json(), "\n".join(lines))
        return 0
    if args.m < 2:
        raise UsageError(f"--m must be at least 2, got {args.m}")
    vec = a_one_param(args.m) if args.one_param else a_vector(args.m, equal_params=args.m % 2 == 1)
    _emit(args, vec.to_json(), str(vec))
    return 0


def cmd_present(args) -> int:
    mat = load_matrix(args.input)
    pres = present(mat, args.kind)
    _emit(args, pres.to_json(), str(pres))
    return 0


def cmd_dihedral(args) -> int:
    if args.m < 2:
        raise UsageError(f"--m must be at least 2, got {args.m}")
    equal = args.one_param or args.m % 2 == 1
    if args.check:
        results = check_dihedral(args.m, equal, eval_mode=args.eval_mode, seed=args.seed)
        _emit(args, [r.to_json() for r in results], "\n".join(str(r) for r in results))
        return 0 if all(r.passed for r in results) else 1
    exp = braid_f_expansion(args.m, equal)
    rows = [(k, str(exp.antisym.get(k, 0)), str(exp.sym.get(k, 0))) for k in range(args.m, -1, -1)]
    payload = {"m": args.m, "equal_params": equal,
               "terms": [{"k": k, "antisymmetric": a, "symmetric": s} for k, a, s in rows]}
    text = "\n".join(f"k={k}: antisymmetric {a}, symmetric {s}" for k, a, s in rows)
    _emit(args, payload, text)
    return 0


def cmd_rs(args) -> int:
    data = json.loads(Path(args.input).read_text())
    pres = GroupPresentation.from_json(data)
    chi = SignCharacter.load(pres, args.character)
    kernel = rs_rewrite(SchreierSetup(pres, chi, args.g0))
    if args.simplify:
        kernel = simplify(kernel)
    _emit(args, kernel.to_json(), str(kernel))
    return 0


def _load_corpus(source: str | None) -> tuple:
    if source in (None, "default"):
        return DEFAULT_CORPUS
    text = Path(source).read_text()
    try:
        names = json.loads(text)
    except json.JSONDecodeError:
        names = [line.strip() for line in text.splitlines() if line.strip() and not line.startswith("#")]
    if not isinstance(names, list) or not all(isinstance(n, str) for n in names):
        raise UsageError("corpus file must list Coxeter type names")
    for n in names:
        load_matrix(n)  # validates the name early
    return tuple(names)


def cmd_verify(args) -> int:
    corpus = _load_corpus(args.corpus)
    names = SUITES if args.suite == "all" else (args.suite,)
    reports = [run_suite(s, corpus, cap=args.cap, seed=args.seed) for s in names]
    ok = all(r.passed for r in reports)
    summary = "PASS" if ok else "FAIL"
    _emit(args, {"passed": ok, "suites": [r.to_json() for r in reports]},
          "\n".join(r.to_text() for r in reports) + f"\n{summary}")
    return 0 if ok else 1


def cmd_info(args) -> int:
    mat = load_matrix(args.input)
    graph = connected_extension(mat)
    classes = parameter_classes(mat)
    cycles = cycle_basis(graph)
    order = group_order(mat)
    payload = {
        "name": mat.name,
        "rank": mat.n,
        "matrix": mat.to_raw(),
        "parameter_classes": classes,
        "edges": [[i, j, graph.label(i, j) if graph.label(i, j) != float("inf") else 0] for i, j in graph.edges],
        "added_edges": sorted([list(e) for e in graph.added_edges]),
        "cycle_basis_size": len(cycles),
        "group_order": order,
    }
    text = "\n".join([
        f"type: {mat.name or '(unnamed)'}",
        f"rank: {mat.n}",
        f"parameter classes: {classes}",
        f"connected extension: {len(graph.edges)} edges, {len(graph.added_edges)} added with label 2",
        f"cycle basis size: {len(cycles)}",
        f"group order: {order if order is not None else 'unknown'}",
    ])
    _emit(args, payload, text)
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="alterna", description="Alternating subgroups of Coxeter and braid groups "
                                     "and alternating subalgebras of Hecke algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="coefficients a_k of the Hecke relations")
    p.add_argument("--m", type=int)
    p.add_argument("--one-param", action="store_true", help="use the closed one-parameter formula")
    p.add_argument("--alpha", action="store_true", help="print the alpha table instead")
    p.add_argument("--check-gen", action="store_true", help="check the generating functions")
    p.add_argument("--max", type=int, help="series order for --check-gen")
    _add_format(p)
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("present", help="emit a presentation")
    p.add_argument("--input", required=True, help="type name such as A3 or I2(5), or a matrix JSON file")
    p.add_argument("--kind", required=True, choices=PRESENTATION_KINDS)
    _add_format(p)
    p.set_defaults(func=cmd_present)

    p = sub.add_parser("dihedral", help="rank-2 Hecke algebra checks")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--check", action="store_true", help="run the identity checks")
    p.add_argument("--eval-mode", action="store_true", help="evaluate at random rational points")
    p.add_argument("--one-param", action="store_true", help="equal parameters for even m")
    p.add_argument("--seed", type=int, default=0)
    _add_format(p)
    p.set_defaults(func=cmd_dihedral)

    p = sub.add_parser("rs", help="Reidemeister-Schreier rewriting for the kernel of a sign character")
    p.add_argument("--input", required=True, help="presentation JSON")
    p.add_argument("--character", default="all-minus", help="all-minus or a JSON file {generator: +1|-1}")
    p.add_argument("--g0", help="transversal generator (default: first generator with value -1)")
    p.add_argument("--simplify", action="store_true", help="eliminate generators from short relators")
    _add_format(p)
    p.set_defaults(func=cmd_rs)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=SUITES + ("all",))
    p.add_argument("--corpus", default="default", help="default, or a file listing type names")
    p.add_argument("--cap", type=int, default=50_000, help="coset cap for Todd-Coxeter")
    p.add_argument("--seed", type=int, default=0)
    _add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("info", help="summary of a Coxeter matrix")
    p.add_argument("--input", required=True)
    _add_format(p)
    p.set_defaults(func=cmd_info)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, CoxeterMatrixError, RewriteError, ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"alterna: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
