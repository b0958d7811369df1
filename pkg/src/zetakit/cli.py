"""Command-line surface: compute | verify | converge | list.

Exit codes: 0 success, 1 verification failure (other than the documented
published-variant discrepancies), 2 usage error, 3 inconclusive checks.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import catalog, convergence, verifier
from .catalog import CatalogKey
from .specfun import (
    CL2_METHODS,
    EvalResult,
    catalan,
    clausen_cl2,
    dirichlet_beta,
    euler_gamma,
    riemann_zeta,
    zeta_e_weighted,
)

__all__ = ["main", "build_parser", "CliConfig"]

CONSTANTS = ("zeta", "zeta3", "catalan", "gamma", "beta", "cl2", "zetaE")

ZETA3_METHOD_ALIASES = {
    "apery": "ZETA3_APERY_14",
    "ewell": "ZETA3_EWELL_16",
    "cvijovic-klinowski": "ZETA3_CK_15",
}
ZETA3_METHOD_IDS = tuple(e.id for e in catalog.registry().values() if "zeta3" in e.targets)


@dataclass
class CliConfig:
    tolerance: float = 1e-10
    param_limit: int = 12
    format: str = "text"
    out: str | None = None

    def validate(self) -> None:
        if not (1e-13 <= self.tolerance <= 1e-2):
            raise ValueError("tolerance must be in [1e-13, 1e-2]")
        if not (1 <= self.param_limit <= 64):
            raise ValueError("param-limit must be in [1, 64]")
        if self.format not in ("csv", "json", "markdown", "text"):
            raise ValueError(f"unknown format {self.format!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zetakit",
        description="Exact/float toolkit for rational zeta series, Cl2, and zeta(3).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="evaluate one constant")
    p_compute.add_argument("constant", choices=CONSTANTS)
    p_compute.add_argument("value", nargs="?", default=None,
                           help="argument for zeta/beta (real) or zetaE (integer)")
    p_compute.add_argument("--theta", type=float, default=None, help="angle in radians for cl2")
    p_compute.add_argument("--method", default=None,
                           help="zeta3: catalog id, apery/ewell/cvijovic-klinowski, or direct; "
                                "cl2: direct/accel/peeled/wzl/auto")
    p_compute.add_argument("--tol", type=float, default=1e-10)

    p_verify = sub.add_parser("verify", help="verify catalogued identities")
    group = p_verify.add_mutually_exclusive_group(required=True)
    group.add_argument("--all", action="store_true", dest="all_ids")
    group.add_argument("--id", dest="id", default=None)
    p_verify.add_argument("--m", type=int, default=None, help="family parameter m")
    p_verify.add_argument("--k", type=int, default=None, help="family parameter k")
    p_verify.add_argument("--tol", type=float, default=1e-10)
    p_verify.add_argument("--param-limit", type=int, default=12)
    p_verify.add_argument("--format", default="text", choices=("text", "json"))
    p_verify.add_argument("--out", default=None)

    p_conv = sub.add_parser("converge", help="rank identities by convergence speed")
    p_conv.add_argument("--target", default="zeta3", choices=convergence.COMPARE_TARGETS)
    p_conv.add_argument("--tol", type=float, default=1e-10)
    p_conv.add_argument("--format", default="csv", choices=("csv", "json", "markdown"))
    p_conv.add_argument("--out", default=None)

    p_list = sub.add_parser("list", help="dump the identity registry")
    p_list.add_argument("--format", default="text", choices=("text", "json"))
    p_list.add_argument("--out", default=None)

    return parser


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _print_result(res: EvalResult) -> None:
    print(f"value={res.value:.16g} terms_used={res.terms_used} error_bound={res.error_bound:.3e}")


def _compute_zeta3(method: str | None, tol: float) -> EvalResult:
    if method is None or method == "direct":
        return riemann_zeta(3.0)
    ident = ZETA3_METHOD_ALIASES.get(method.lower(), method.upper())
    if ident not in ZETA3_METHOD_IDS:
        raise ValueError(f"unknown zeta3 method {method!r}")
    key = CatalogKey(ident)
    depth = verifier._choose_depth(key, tol)
    return catalog.assembled_sum(key, depth)


def _cmd_compute(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    tol = args.tol
    try:
        if args.constant == "zeta":
            if args.value is None:
                raise ValueError("compute zeta needs an argument s")
            res = riemann_zeta(float(args.value))
        elif args.constant == "zeta3":
            res = _compute_zeta3(args.method, tol)
        elif args.constant == "catalan":
            res = catalan()
        elif args.constant == "gamma":
            res = euler_gamma()
        elif args.constant == "beta":
            if args.value is None:
                raise ValueError("compute beta needs an argument s")
            res = dirichlet_beta(float(args.value))
        elif args.constant == "cl2":
            if args.theta is None:
                raise ValueError("compute cl2 needs --theta")
            method = args.method or "auto"
            if method not in CL2_METHODS:
                raise ValueError(f"unknown cl2 method {method!r}")
            res = clausen_cl2(args.theta, method)
        else:  # zetaE
            if args.value is None:
                raise ValueError("compute zetaE needs an integer k")
            res = zeta_e_weighted(int(args.value))
    except (ValueError, KeyError) as exc:
        parser.error(str(exc))  # exits 2
    _print_result(res)
    return 0


def _cmd_verify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    cfg = CliConfig(tolerance=args.tol, param_limit=args.param_limit, format=args.format, out=args.out)
    try:
        cfg.validate()
    except ValueError as exc:
        parser.error(str(exc))
    try:
        if args.all_ids:
            reports = verifier.verify_all(cfg.tolerance, cfg.param_limit)
        else:
            param = args.m if args.m is not None else args.k
            key = CatalogKey(args.id, param)
            try:
                reports = verifier.verify(key, cfg.tolerance)
            except verifier.InconclusiveError:
                reports = [verifier._inconclusive_report(key, cfg.tolerance)]
    except (KeyError, ValueError) as exc:
        parser.error(str(exc))
    text = verifier.reports_to_json(reports) if cfg.format == "json" else verifier.reports_to_text(reports)
    _emit(text, cfg.out)
    if any(r.inconclusive for r in reports):
        return 3
    if any(not r.passed and r.variant != "printed" for r in reports):
        return 1
    return 0


def _cmd_converge(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    cfg = CliConfig(tolerance=args.tol, format=args.format, out=args.out)
    try:
        cfg.validate()
    except ValueError as exc:
        parser.error(str(exc))
    try:
        table = convergence.compare(args.target, cfg.tolerance)
    except verifier.InconclusiveError as exc:
        print(str(exc), file=sys.stderr)
        return 3
    except ValueError as exc:
        parser.error(str(exc))
    _emit(convergence.export(table, cfg.format), cfg.out)
    return 0


def _cmd_list(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    summaries = catalog.list_identities()
    if args.format == "json":
        text = json.dumps(
            [
                {
                    "id": s.id,
                    "paper_eq": s.paper_eq,
                    "status": s.status,
                    "params": s.params,
                    "description": s.description,
                }
                for s in summaries
            ],
            indent=2,
        )
    else:
        width = max(len(s.id) for s in summaries)
        text = "\n".join(
            f"{s.id:<{width}}  {s.paper_eq:<9}  {s.status:<14} {s.description}" for s in summaries
        )
    _emit(text, args.out)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "compute":
        return _cmd_compute(args, parser)
    if args.command == "verify":
        return _cmd_verify(args, parser)
    if args.command == "converge":
        return _cmd_converge(args, parser)
    return _cmd_list(args, parser)


if __name__ == "__main__":
    sys.exit(main())
