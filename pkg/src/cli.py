#!/usr/bin/env python3
"""
Command-line entry point

    python -m src.cli hecke verify data/rmatrices/manin_q3.json
    python -m src.cli fusion mul 1 0 -1 0
    python -m src.cli hopf analyze data/hopf/sweedler4.json --comodule data/comodules/sweedler_trivial.json

Exit codes: 0 success, 1 mathematical failure or disagreement, 2 input error.
"""

import argparse
import json
import sys
from typing import Dict, List, Optional, Sequence

from loguru import logger

from .fusion.a00 import SimpleLabel, fusion_table, tensor, tensor_power_multiplicities
from .hecke.quantum_algebra import (
    AlgebraKind,
    centralizer_dim,
    commutant_dim,
    detect_birank11,
    fusion_multiplicity_square_sum,
    poincare_table,
)
from .hecke.symmetry import (
    flip,
    hecke_relation_text,
    manin_standard,
    super_flip,
    verify_all,
    verify_hecke_relation,
)
from .hopf.algebra import validate
from .hopf.comodule import validate_comodule
from .hopf.splitting import AnalysisReport, analyze, format_covector
from .io.formats import RMatrixFile, dump, load_comodule, load_hopf, load_rmatrix
from .utils.config import get_settings
from .utils.exceptions import EXIT_MATH_FAILURE, EXIT_OK, AlgebraError, AxiomError, InputFormatError, exit_code_for
from .utils.logger import setup_logger

FAMILIES = {
    "manin_standard": lambda q: manin_standard(q),
    "flip": lambda q: flip(2, q),
    "super_flip": lambda q: super_flip(),
}


def _emit(args, payload: Dict, lines: List[str]):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


def _mark(ok: bool) -> str:
    return "pass" if ok else "FAIL"


# ---------------------------------------------------------------------- hecke


def cmd_hecke_verify(args) -> int:
    h = load_rmatrix(args.file)
    report = verify_all(h)
    lines = [
        f"{h}",
        f"  q valid (q != 0, -1)   {_mark(report.q_valid)}",
        f"  Yang-Baxter equation   {_mark(report.ybe)}",
        f"  Hecke relation         {_mark(report.hecke)}",
        f"  closed (P invertible)  {_mark(report.closed)}",
        f"  q-rank                 {report.qrank or 'undefined'}",
    ]
    if report.ybe_failure:
        row, col, lhs, rhs = report.ybe_failure
        lines.append(f"  first YBE mismatch at ({row}, {col}): {lhs} != {rhs}")
    payload = {"ybe": report.ybe, "hecke": report.hecke, "closed": report.closed, "qrank": report.qrank,
               "q_valid": report.q_valid}
    _emit(args, payload, lines)
    return EXIT_OK if report.all_pass else EXIT_MATH_FAILURE


def cmd_hecke_poincare(args) -> int:
    h = load_rmatrix(args.file)
    if not verify_hecke_relation(h):
        raise AxiomError("hecke_relation", f"{h} does not satisfy {hecke_relation_text(h)}")
    sym = poincare_table(h, AlgebraKind.SYMMETRIC, args.max_degree)
    verdict = detect_birank11(h, args.max_degree) if args.max_degree >= 3 else None
    ext = verdict.table if verdict else poincare_table(h, AlgebraKind.ANTISYMMETRIC, args.max_degree)

    lines = [f"{h}", f"{'n':>3} {'dim S_n':>8} {'dim Λ_n':>8}"]
    lines += [f"{n:>3} {s:>8} {e:>8}" for n, (s, e) in enumerate(zip(sym.dims, ext.dims))]
    payload = {"sym": sym.dims, "ext": ext.dims}
    if verdict:
        label = "birank (1,1)" if verdict.is_birank11 else "not birank (1,1)"
        lines.append(f"verdict: {label}, fitted a={ext.fitted_a} b={ext.fitted_b}")
        payload.update(is_birank11=verdict.is_birank11, a=ext.fitted_a, b=ext.fitted_b)
    else:
        lines.append("verdict: needs --max-degree >= 3")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_hecke_commutant(args) -> int:
    h = load_rmatrix(args.file)
    if not verify_hecke_relation(h):
        raise AxiomError("hecke_relation", f"{h} does not satisfy {hecke_relation_text(h)}")
    n = args.degree
    endo = commutant_dim(h, n)
    central = centralizer_dim(h, n)
    predicted = fusion_multiplicity_square_sum(n)
    lines = [
        f"{h}, degree {n}",
        f"  comodule endomorphisms of V^⊗{n}   {endo}",
        f"  centralizer of the R_i            {central}",
        f"  Σ_k C({n - 1},k)²                    {predicted}",
    ]
    _emit(args, {"degree": n, "commutant_dim": endo, "centralizer_dim": central, "predicted": predicted}, lines)
    return EXIT_OK


def cmd_hecke_export(args) -> int:
    q = args.q if args.q is not None else get_settings().DEFAULT_Q
    h = FAMILIES[args.family](q)
    dump(RMatrixFile.from_symmetry(h), args.out)
    logger.info(f"wrote {h} to {args.out}")
    return EXIT_OK


# ---------------------------------------------------------------------- fusion


def cmd_fusion_mul(args) -> int:
    x, y = SimpleLabel(args.m, args.n), SimpleLabel(args.p, args.q)
    decomposition = tensor(x, y)
    _emit(args, decomposition.to_json(), [str(decomposition)])
    return EXIT_OK


def cmd_fusion_table(args) -> int:
    rows = list(fusion_table(args.range))
    failures = [row for row in rows if not row.dimension_ok]
    lines = [f"{row.x} ⊗ {row.y} = {row.decomposition}" for row in rows]
    lines.append(f"{len(rows)} products, {len(failures)} dimension failures")
    payload = {
        "range": args.range,
        "rows": [{"x": row.x.as_pair(), "y": row.y.as_pair(), **row.decomposition.to_json()} for row in rows],
        "dimension_failures": len(failures),
    }
    _emit(args, payload, lines)
    return EXIT_OK if not failures else EXIT_MATH_FAILURE


def cmd_fusion_power(args) -> int:
    multiplicities = tensor_power_multiplicities(args.n)
    ordered = sorted(multiplicities.items(), reverse=True)
    lines = [f"V^⊗{args.n} composition factors:"] + [f"  {label}  x{c}" for label, c in ordered]
    payload = {"n": args.n, "factors": [[label.m, label.n, c] for label, c in ordered]}
    _emit(args, payload, lines)
    return EXIT_OK


# ---------------------------------------------------------------------- hopf


def _report_lines(h, report: AnalysisReport) -> List[str]:
    lines = [
        f"{h}",
        "  axioms                   pass",
        f"  left integral            {format_covector(h, report.left_integral)}",
        f"  right integral           {format_covector(h, report.right_integral)}",
        f"  rank b                   {report.b_rank}",
        f"  convolution associative  {report.convolution_associative}",
    ]
    for c in report.comodules:
        lines.append(f"  comodule {c.name} (dim {c.dim}): simple={c.simple}")
        if c.simple:
            flag = "AGREE" if c.agree else "DISAGREE"
            lines.append(f"    dim Cf={c.cf_dim} splitting={c.splitting} oracle={c.oracle} {flag}")
            lines.append(f"    c = {c.c_matrix}")
    return lines


def cmd_hopf_analyze(args) -> int:
    h = load_hopf(args.file)
    check = validate(h)
    if not check.ok:
        raise AxiomError(check.failed_axiom, check.detail or "")
    comodules = []
    for path in args.comodule or []:
        m = load_comodule(path)
        m_check = validate_comodule(h, m)
        if not m_check.ok:
            raise InputFormatError(f"{path}: {m_check.failed_axiom} fails ({m_check.detail})")
        comodules.append(m)
    report = analyze(h, comodules)
    payload = report.model_dump()
    payload["agree"] = not report.disagreements
    _emit(args, payload, _report_lines(h, report))
    if report.disagreements:
        logger.error(f"splitting test and oracle disagree on {report.disagreements}")
        return EXIT_MATH_FAILURE
    return EXIT_OK


# ---------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="algebra", description="Exact Hecke, fusion and Hopf computations")
    parser.add_argument("--log-level", default=None, help="override ALGEBRA_LOG_LEVEL")
    groups = parser.add_subparsers(dest="group", required=True)

    hecke = groups.add_parser("hecke", help="Hecke symmetries").add_subparsers(dest="command", required=True)
    p = hecke.add_parser("verify", parents=[common], help="YBE, Hecke relation, closure and q-rank")
    p.add_argument("file")
    p.set_defaults(func=cmd_hecke_verify)
    p = hecke.add_parser("poincare", parents=[common], help="dims of S_n and Λ_n, birank verdict")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, default=get_settings().POINCARE_MAX_DEGREE)
    p.set_defaults(func=cmd_hecke_poincare)
    p = hecke.add_parser("commutant", parents=[common], help="comodule endomorphisms of V^⊗n")
    p.add_argument("file")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_hecke_commutant)
    p = hecke.add_parser("export", parents=[common], help="write a builtin family to a file")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("out")
    p.add_argument("--q", default=None)
    p.set_defaults(func=cmd_hecke_export)

    fusion = groups.add_parser("fusion", help="A0|0 fusion rules").add_subparsers(dest="command", required=True)
    p = fusion.add_parser("mul", parents=[common], help="decompose I_{m,n} ⊗ I_{p,q}")
    for name in ("m", "n", "p", "q"):
        p.add_argument(name, type=int)
    p.set_defaults(func=cmd_fusion_mul)
    p = fusion.add_parser("table", parents=[common], help="all products in a label box")
    p.add_argument("--range", type=int, required=True)
    p.set_defaults(func=cmd_fusion_table)
    p = fusion.add_parser("power", parents=[common], help="composition factors of V^⊗n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_fusion_power)

    hopf = groups.add_parser("hopf", help="finite-dimensional Hopf algebras").add_subparsers(
        dest="command", required=True
    )
    p = hopf.add_parser("analyze", parents=[common], help="integrals, forms and the splitting criterion")
    p.add_argument("file")
    p.add_argument("--comodule", action="append", help="comodule file; may be repeated")
    p.set_defaults(func=cmd_hopf_analyze)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    params = get_settings().logging_params
    if args.log_level:
        params["level"] = args.log_level
    setup_logger(**params)
    try:
        return args.func(args)
    except AlgebraError as e:
        logger.error(str(e))
        print(f"error: {e}", file=sys.stderr)
        return exit_code_for(e)


if __name__ == "__main__":
    sys.exit(main())
