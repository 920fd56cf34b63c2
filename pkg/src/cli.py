"""Command-line front end: suites, norms, K-curves and the f_h / f_s sweeps.

Exit codes: 0 success, 1 assertion failure, 2 usage or configuration error.
"""

import argparse
import json
import math
import sys
from pathlib import Path

from pydantic import ValidationError

from src.core.errors import CesaroInterpError, DivergenceError, DomainError
from src.settings import custom_logger, settings
from src.structs import (
    CorpusSpec,
    CoupleKind,
    CoupleRequest,
    Domain,
    ExitCode,
    KMethod,
    NormKind,
    Seq,
    StepFunction,
    SUITE_ALIASES,
    SuiteConfig,
    SuiteName,
    TGridSpec,
    Weight,
    WeightKind,
)
from src.utils import KCURVE_COLUMNS, SWEEP_COLUMNS, read_function_spec, to_frame, write_csv, write_json
from src.workflows import SuiteState, fh_ratio, fs_sweep, run_suite
from src.workflows.queries import compute_norm, couple_from_request, kcurve_rows

# Create logger
logger = custom_logger("Command Line")


def _floats(text: str) -> list[float]:
    return [float(v) for v in text.split(",") if v.strip()]


def _add_function_args(parser: argparse.ArgumentParser) -> None:
    src = parser.add_mutually_exclusive_group(required=True)
    src.add_argument("--function", type=Path, help="step-function file ('domain unit' header, then 'x_i v_i' lines)")
    src.add_argument("--breaks", type=_floats, help="inline breakpoints x_0,...,x_n")
    parser.add_argument("--vals", type=_floats, help="inline values v_1,...,v_n (with --breaks)")
    parser.add_argument("--halfline", type=float, metavar="T", help="inline function lives on HalfLine(T)")


def _function(args: argparse.Namespace) -> StepFunction:
    if args.function is not None:
        return read_function_spec(args.function)
    if not args.vals:
        raise DomainError("--breaks needs --vals")
    domain = Domain.halfline(args.halfline) if args.halfline else Domain.unit()
    return StepFunction.from_arrays(args.breaks, args.vals, domain)


def _couple_request(args: argparse.Namespace) -> CoupleRequest:
    if args.couple == CoupleKind.RESTRICTED:
        if args.base is None or args.support is None:
            raise DomainError("restricted couples need --base and --support")
        base = CoupleRequest(kind=args.base, w0=args.w0, w1=args.w1)
        return CoupleRequest(kind=args.couple, base=base, support=tuple(args.support))
    return CoupleRequest(kind=args.couple, w0=args.w0, w1=args.w1)


def cmd_verify(args: argparse.Namespace) -> ExitCode:
    overrides = json.loads(args.config.read_text(encoding="utf-8")) if args.config else {}
    corpus = {**overrides.pop("corpus", {}), "seed": args.seed}
    if args.count is not None:
        corpus["count"] = args.count
    params = {"suite": args.suite, "corpus": CorpusSpec.model_validate(corpus), **overrides}
    if args.p:
        params["p_values"] = tuple(args.p)
    if args.mesh_n is not None:
        params["mesh_n"] = args.mesh_n
    if args.workers is not None:
        params["workers"] = args.workers
    if args.converge:
        params["converge"] = True
    config = SuiteConfig.model_validate(params)

    state = SuiteState(suite=config.suite.value, seed=config.corpus.seed)
    report = run_suite(config, state=state)
    out = args.out or Path(settings.OUTPUT_DIR)
    write_json(report, out / f"{config.suite.value}.json")
    write_csv(to_frame(state.rows, SWEEP_COLUMNS), out / f"{config.suite.value}.csv")
    if report.failures:
        rows = [f.model_dump(mode="json") for f in report.failures]
        write_csv(to_frame(rows), out / f"{config.suite.value}_failures.csv")
    for summary in report.assertions:
        print(f"{summary.id:32s} checks={summary.checks:6d} failures={summary.failures:4d} margin={summary.worst_margin:.3e}")
    for obs in report.observations:
        print(f"{obs.id:32s} ratio in [{obs.minimum:.6g}, {obs.maximum:.6g}] drift={obs.drift} bounded={obs.bounded}")
    print(f"suite {config.suite.value}: {'passed' if report.passed else 'FAILED'}")
    return ExitCode.OK if report.passed else ExitCode.ASSERTION_FAILED


def cmd_kcurve(args: argparse.Namespace) -> ExitCode:
    source = Seq(vals=tuple(args.sequence)) if args.sequence else _function(args)
    couple = couple_from_request(_couple_request(args))
    grid = TGridSpec(t_min=args.t_min, t_max=args.t_max, points_per_decade=args.points_per_decade)
    rows = kcurve_rows(source, couple, grid, args.method, args.mesh_n)
    out = args.out or Path(settings.OUTPUT_DIR) / "kcurve.csv"
    write_csv(to_frame(rows, KCURVE_COLUMNS), out)
    print(f"{len(rows)} rows for {couple.label()} written to {out}")
    return ExitCode.OK


def cmd_norm(args: argparse.Namespace) -> ExitCode:
    f = _function(args)
    value = compute_norm(f, args.norm, args.p, Weight.named(args.weight))
    print(repr(value))
    return ExitCode.OK


def cmd_fh(args: argparse.Namespace) -> ExitCode:
    hs = args.h or [1.0 - 2.0**-k for k in range(1, 11)]
    results = [fh_ratio(h, args.p) for h in hs]
    rows = [
        {
            "parameter": f"h={r.h!r}",
            "value_lhs": r.ratio_p,
            "value_rhs": r.lower_bound,
            "bound": r.lower_bound,
            "pass": r.ratio_p >= r.lower_bound,
        }
        for r in results
    ]
    out = args.out or Path(settings.OUTPUT_DIR) / "fh.csv"
    write_csv(to_frame(rows, SWEEP_COLUMNS), out)
    for r in results:
        print(f"h={r.h:.10f} cop={r.cop_p:.6g} ces={r.ces_p:.6g} ratio^p={r.ratio_p:.6g} >= {r.lower_bound:.6g}")
    return ExitCode.OK if all(row["pass"] for row in rows) else ExitCode.ASSERTION_FAILED


def cmd_fs(args: argparse.Namespace) -> ExitCode:
    s_grid = args.s or [math.exp(-k) for k in range(1, args.k_max + 1)]
    results = fs_sweep(args.p, s_grid, args.mesh_n, workers=args.workers)
    rows = [
        {
            "parameter": f"s={r.s!r}",
            "value_lhs": r.certified_ratio,
            "value_rhs": r.ratio,
            "bound": r.bound,
            "pass": r.certified_ratio >= r.bound,
        }
        for r in results
    ]
    out = args.out or Path(settings.OUTPUT_DIR) / "fs.csv"
    write_csv(to_frame(rows, SWEEP_COLUMNS), out)
    for r in results:
        print(f"s={r.s:.6g} ratio={r.ratio:.6g} certified={r.certified_ratio:.6g} bound={r.bound:.6g}")
    return ExitCode.OK if all(row["pass"] for row in rows) else ExitCode.ASSERTION_FAILED


def cmd_serve(args: argparse.Namespace) -> ExitCode:
    from src.api.main import main as serve

    serve(host=args.host, port=args.port, reload=args.reload)
    return ExitCode.OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cesaro-interp",
        description="Cesaro/Copson norms, K-functionals and real-interpolation norms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=[s.value for s in SuiteName] + list(SUITE_ALIASES))
    p.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    p.add_argument("--count", type=int, help="corpus size")
    p.add_argument("--p", type=float, nargs="+", help="exponents, each in (1, inf)")
    p.add_argument("--mesh-n", type=int, dest="mesh_n")
    p.add_argument("--workers", type=int)
    p.add_argument("--converge", action="store_true", help="refine LP meshes until K settles")
    p.add_argument("--config", type=Path, help="JSON file with suite config overrides")
    p.add_argument("--out", type=Path, help=f"output directory (default {settings.OUTPUT_DIR})")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("kcurve", help="sample t -> K(t, f) to CSV")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--function", type=Path)
    src.add_argument("--breaks", type=_floats)
    src.add_argument("--sequence", type=_floats, help="finitely supported sequence a_1,...,a_N")
    p.add_argument("--vals", type=_floats)
    p.add_argument("--halfline", type=float, metavar="T")
    p.add_argument("--couple", type=CoupleKind, required=True, choices=list(CoupleKind))
    p.add_argument("--w0", type=WeightKind, choices=list(WeightKind))
    p.add_argument("--w1", type=WeightKind, choices=list(WeightKind))
    p.add_argument("--base", type=CoupleKind, choices=list(CoupleKind), help="base couple of a restricted couple")
    p.add_argument("--support", type=float, nargs=2, metavar=("A", "B"))
    p.add_argument("--method", type=KMethod, default=KMethod.CLOSED_FORM, choices=list(KMethod))
    p.add_argument("--t-min", type=float, dest="t_min", default=settings.KCURVE_T_MIN)
    p.add_argument("--t-max", type=float, dest="t_max", default=settings.KCURVE_T_MAX)
    p.add_argument("--points-per-decade", type=int, dest="points_per_decade", default=settings.KCURVE_POINTS_PER_DECADE)
    p.add_argument("--mesh-n", type=int, dest="mesh_n")
    p.add_argument("--out", type=Path)
    p.set_defaults(handler=cmd_kcurve)

    p = sub.add_parser("norm", help="print one norm of a step function")
    _add_function_args(p)
    p.add_argument("--norm", type=NormKind, required=True, choices=list(NormKind))
    p.add_argument("--p", type=float, default=2.0)
    p.add_argument("--weight", type=WeightKind, default=WeightKind.ONE, choices=list(WeightKind))
    p.set_defaults(handler=cmd_norm)

    p = sub.add_parser("fh", help="Copson/Cesaro ratios of (1 - t)^(-1/2) on [h, 1)")
    p.add_argument("--h", type=float, nargs="+")
    p.add_argument("--p", type=float, default=2.0)
    p.add_argument("--out", type=Path)
    p.set_defaults(handler=cmd_fh)

    p = sub.add_parser("fs", help="interpolation-to-Cesaro ratios of indicators of [0, s]")
    p.add_argument("--s", type=float, nargs="+")
    p.add_argument("--k-max", type=int, dest="k_max", default=8, help="s = e^-1, ..., e^-k_max")
    p.add_argument("--p", type=float, default=2.0)
    p.add_argument("--mesh-n", type=int, dest="mesh_n")
    p.add_argument("--workers", type=int)
    p.add_argument("--out", type=Path)
    p.set_defaults(handler=cmd_fs)

    p = sub.add_parser("serve", help="run the HTTP API")
    p.add_argument("--host", default="0.0.0.0")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--reload", action="store_true")
    p.set_defaults(handler=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return int(args.handler(args))
    except (DomainError, DivergenceError, ValidationError, ValueError, OSError) as e:
        logger.error(f"{args.command}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return int(ExitCode.USAGE_ERROR)
    except (AssertionError, CesaroInterpError) as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"failed: {e}", file=sys.stderr)
        return int(ExitCode.ASSERTION_FAILED)


if __name__ == "__main__":
    sys.exit(main())
