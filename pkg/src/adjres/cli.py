"""Command-line entry point: ``adjres <verb> <TYPE> [options]``.

Exit codes: 0 success, 1 mismatch against the predicted shape, 2 usage error
or a guarded input (E8, or E7 without ``--allow-e7``).
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .adjointres import (SCHEMA_VERSION, ComputeConfig, adjoint_catalog, arbitrate_j,
                         assemble_jacobian_resolution, assemble_structure_resolution,
                         check_computable, compare_resolutions, compute_tables,
                         minimality_witness, predicted_resolution, verify_cohomology_pattern,
                         wedge_F_cohomology)
from .bbw import bbw_cohomology
from .errors import AdjresError
from .repcalc import weyl_dim
from .rootcore import LieType, build_root_system
from .symcheck import (build_algebra, check_nu_in_kernel, graded_kernel_dims,
                       predicted_kernel_dim, saito_determinant_check)

VERBS = ("roots", "bbw", "cohom", "resolve", "verify", "kernel-check", "saito")


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _lie_type(text: str) -> LieType:
    try:
        return LieType.parse(text)
    except AdjresError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="adjres", description="Exact Lie-theoretic computations "
                                 "for adjoint varieties and their discriminants.")
    ap.add_argument("verb", choices=VERBS)
    ap.add_argument("type", type=_lie_type, help="Lie type such as A3, B3, G2, E6")
    ap.add_argument("--parabolic", type=_int_list, help="1-based node list, e.g. 1,3")
    ap.add_argument("--weight", type=_int_list, help="fundamental-weight coordinates")
    ap.add_argument("--wedge", type=int, help="exterior power p of F^vee")
    ap.add_argument("--twist-L", type=int, choices=(0, 1), default=0, dest="twist_L")
    ap.add_argument("--sheaf", choices=("jacobian", "structure"), default="jacobian")
    ap.add_argument("--max-degree", type=int, default=3, dest="max_degree")
    ap.add_argument("--format", choices=("table", "json"), default="table", dest="fmt")
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--allow-e7", action="store_true", dest="allow_e7")
    return ap


def _emit(fmt: str, payload: dict, lines: list[str]) -> None:
    if fmt == "json":
        print(json.dumps({"schema": SCHEMA_VERSION, **payload}, sort_keys=True))
    else:
        print("\n".join(lines))


def _cohom_lines(rs, res) -> list[str]:
    if res.is_zero():
        return ["all cohomology vanishes"]
    out = []
    for q in res.degrees():
        for w, m in sorted(res.groups[q].items(), key=lambda wm: tuple(-x for x in wm[0])):
            out.append(f"H^{q}: {m} x V{list(w)} (dim {weyl_dim(rs, w)})")
    return out


def _cmd_roots(args, config) -> int:
    rs = build_root_system(args.type)
    payload = {"type": str(args.type), "exponents": list(rs.exponents),
               "positive_roots": len(rs.positive_roots), "weyl_order": rs.weyl_order,
               "coxeter_number": rs.coxeter_number, "long_roots": rs.num_long_roots}
    lines = [" ".join(map(str, rs.exponents)),
             f"positive roots: {len(rs.positive_roots)}",
             f"|W|: {rs.weyl_order}",
             f"Coxeter number: {rs.coxeter_number}",
             f"long roots: {rs.num_long_roots}"]
    _emit(args.fmt, payload, lines)
    return 0


def _cmd_bbw(args, config) -> int:
    rs = build_root_system(args.type)
    if args.weight is None or args.parabolic is None:
        raise _Usage("bbw needs --parabolic and --weight")
    if len(args.weight) != rs.rank:
        raise _Usage(f"--weight needs {rs.rank} entries")
    res = bbw_cohomology(rs, args.parabolic, args.weight)
    _emit(args.fmt, {"type": str(args.type), "parabolic": sorted(args.parabolic),
                     "weight": list(args.weight), "cohomology": res.to_json(rs)},
          _cohom_lines(rs, res))
    return 0


def _cmd_cohom(args, config) -> int:
    if args.wedge is None:
        raise _Usage("cohom needs --wedge p")
    X = adjoint_catalog(args.type)
    check_computable(X, config)
    res = wedge_F_cohomology(X, args.wedge, args.twist_L, config)
    rs = X.rs
    label = f"wedge^{args.wedge} F^vee" + (" (x) L" if args.twist_L else "")
    _emit(args.fmt, {"type": str(args.type), "wedge": args.wedge, "twist_L": args.twist_L,
                     "cohomology": res.to_json(rs)},
          [f"{args.type} {label}"] + _cohom_lines(rs, res))
    return 0


def _cmd_resolve(args, config) -> int:
    X = adjoint_catalog(args.type)
    check_computable(X, config)
    if args.sheaf == "structure":
        got = assemble_structure_resolution(X)
    else:
        got = assemble_jacobian_resolution(X, compute_tables(X, config))
    diff = compare_resolutions(got, predicted_resolution(args.type, args.sheaf))
    if args.fmt == "json":
        payload = got.to_json()
        payload["diff"] = [{"u": u, "twist": tw, "rep": list(rep), "computed": a, "predicted": b}
                           for u, tw, rep, a, b in diff.entries]
        print(json.dumps(payload, sort_keys=True))
    else:
        print(got.render(X.rs))
        if not diff.empty:
            print("differences from the predicted shape (computed vs predicted):")
            print(diff.render())
    return 0 if diff.empty else 1


def _cmd_verify(args, config) -> int:
    X = adjoint_catalog(args.type)
    check_computable(X, config)
    table = compute_tables(X, config)
    checks: list[tuple[str, bool, str]] = []
    pat = verify_cohomology_pattern(X, table)
    checks.append(("cohomology pattern", pat.ok, "; ".join(pat.mismatches)))
    jac = assemble_jacobian_resolution(X, table)
    for name, got in (("jacobian", jac), ("structure", assemble_structure_resolution(X))):
        d = compare_resolutions(got, predicted_resolution(X.lie_type, name))
        checks.append((f"{name} resolution", d.empty, d.render().replace("\n", "; ")))
    rank_sum, deg = jac.degree_data(X.rs)
    checks.append(("discriminant degree", rank_sum == 0 and deg == X.disc_degree,
                   f"rank sum {rank_sum}, degree {deg}, expected {X.disc_degree}"))
    mw = minimality_witness(X, table)
    checks.append(("minimality", mw.ok, str(mw.cancellable)))
    extra = []
    if X.epsilon == 0:
        extra = arbitrate_j(X, config).lines()
    ok = all(c[1] for c in checks)
    payload = {"type": str(X.lie_type), "ok": ok,
               "checks": [{"name": n, "ok": o, "detail": d} for n, o, d in checks],
               "quasi_minuscule": [list(x) for x in pat.qm_locations]}
    lines = [f"{n}: {'ok' if o else 'MISMATCH'}" + ("" if o else f" ({d})") for n, o, d in checks]
    _emit(args.fmt, payload, lines + extra)
    return 0 if ok else 1


_ALGEBRA_OF = {"A": lambda r: ("sl", r + 1), "B": lambda r: ("so", 2 * r + 1),
               "C": lambda r: ("sp", 2 * r)}


def _cmd_kernel_check(args, config) -> int:
    t = args.type
    if t.series not in _ALGEBRA_OF:
        raise _Usage("kernel-check supports types A, B and C")
    alg = build_algebra(*_ALGEBRA_OF[t.series](t.rank))
    nu = check_nu_in_kernel(alg)
    dims = graded_kernel_dims(alg, args.max_degree, threads=args.threads)
    pred = [predicted_kernel_dim(alg, k) for k in range(args.max_degree + 1)]
    ok = nu and dims == pred
    _emit(args.fmt, {"type": str(t), "nu_in_kernel": nu, "kernel_dims": dims,
                     "predicted": pred, "ok": ok},
          [f"gradients of invariants in ker ad: {nu}"]
          + [f"t={k}: kernel {a}, predicted {b}" for k, (a, b) in enumerate(zip(dims, pred))])
    return 0 if ok else 1


def _cmd_saito(args, config) -> int:
    rep = saito_determinant_check(args.type)
    _emit(args.fmt, {"type": str(args.type), "ok": rep.ok,
                     "quotient": None if rep.quotient is None else str(rep.quotient),
                     "determinant": repr(rep.determinant)},
          [f"det = {rep.determinant!r}",
           f"det / prod(positive roots) = {rep.quotient}",
           "factorisation holds" if rep.ok else "factorisation FAILS"])
    return 0 if rep.ok else 1


class _Usage(Exception):
    pass


HANDLERS = {"roots": _cmd_roots, "bbw": _cmd_bbw, "cohom": _cmd_cohom, "resolve": _cmd_resolve,
            "verify": _cmd_verify, "kernel-check": _cmd_kernel_check, "saito": _cmd_saito}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads < 1:
        print("adjres: --threads must be at least 1", file=sys.stderr)
        return 2
    config = ComputeConfig.from_env(threads=args.threads, allow_e7=args.allow_e7)
    try:
        return HANDLERS[args.verb](args, config)
    except (_Usage, AdjresError) as exc:
        print(f"adjres: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
