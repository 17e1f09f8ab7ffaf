"""Command-line front end.

Errors are written to stderr as a one-line JSON object with a ``category``
field and the process exits nonzero: 2 for usage errors, 1 for errors raised
by a computation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import exact, harness, mc
from .asym import MAX_ORDER, VARIANTS, TailSide, pdf_asym, quantile_asym, tail_asym
from .errors import ParameterError, ProductNormalError
from .params import DistParams
from .specfun import SpecFunConfig

SEED_ENV = "PRODNORMAL_SEED"
DEFAULT_SEED = 20240917
MODES = ("exact-series", "exact-integral", "asym", "mc", "numeric")
_ALLOWED_MODES = {
    "pdf": ("exact-series", "exact-integral", "asym", "numeric"),
    "tail": ("numeric", "asym", "mc"),
    "quantile": ("numeric", "asym", "mc"),
}


class UsageError(Exception):
    category = "usage-error"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def _add_params(p: argparse.ArgumentParser):
    g = p.add_argument_group("distribution")
    g.add_argument("--mu-x", type=float, required=True, help="mean of X")
    g.add_argument("--mu-y", type=float, required=True, help="mean of Y")
    g.add_argument("--sigma-x", type=float, default=1.0, help="standard deviation of X (default 1)")
    g.add_argument("--sigma-y", type=float, default=1.0, help="standard deviation of Y (default 1)")
    g.add_argument("--rho", type=float, default=0.0, help="correlation of X and Y (default 0)")
    g.add_argument("--n", type=int, default=1, help="number of summed products (default 1)")


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--output", choices=("text", "csv", "json"), default="text",
                   help="output format (default text)")
    p.add_argument("--out", metavar="PATH", help="write the report to PATH instead of stdout")
    p.add_argument("--config", metavar="PATH",
                   help='JSON file with "eval" and "special" tolerance overrides')


def _add_mc(p: argparse.ArgumentParser):
    p.add_argument("--n-samples", type=int, default=10 ** 6, help="Monte Carlo sample size")
    p.add_argument("--seed", type=int, default=None,
                   help=f"master seed (default ${SEED_ENV} or {DEFAULT_SEED})")
    p.add_argument("--substream", type=int, default=0, help="substream index (default 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="prodnormal",
                     description="Density, tail and quantiles of sums of correlated normal products.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, point, helptext in (("pdf", "--x", "density at x"),
                                  ("tail", "--x", "P(S_n > x), or P(S_n <= x) with --side lower"),
                                  ("quantile", "--p", "x with P(S_n <= x) = p")):
        p = sub.add_parser(name, help=helptext)
        _add_params(p)
        p.add_argument(point, type=float, required=True, dest="point")
        p.add_argument("--mode", choices=_ALLOWED_MODES[name], default="numeric",
                       help="evaluation method (default numeric)")
        if name != "quantile":
            p.add_argument("--order", type=int, default=2,
                           help=f"truncation order for --mode asym, 0..{MAX_ORDER} (default 2)")
            p.add_argument("--side", choices=("upper", "lower"), default="upper",
                           help="tail side (default upper)")
        if name != "pdf":
            p.add_argument("--variant", choices=VARIANTS, default="legacy",
                           help="coefficient forms for --mode asym (default legacy)")
            _add_mc(p)
        _add_common(p)

    p = sub.add_parser("sample", help="draw realisations of S_n")
    _add_params(p)
    p.add_argument("--size", type=int, default=10, help="number of realisations (default 10)")
    p.add_argument("--seed", type=int, default=None,
                   help=f"master seed (default ${SEED_ENV} or {DEFAULT_SEED})")
    p.add_argument("--substream", type=int, default=0, help="substream index (default 0)")
    _add_common(p)

    p = sub.add_parser("table", help="regenerate a relative-error table")
    p.add_argument("--id", type=int, choices=harness.TABLE_IDS, required=True, dest="table_id")
    p.add_argument("--truth", choices=("quadrature", "mc"), default="quadrature",
                   help="source of the reference values (default quadrature)")
    p.add_argument("--variant", choices=VARIANTS, default="legacy",
                   help="coefficient forms for the expansions (default legacy)")
    _add_mc(p)
    _add_common(p)
    return parser


def load_config(path: str | None) -> exact.EvalConfig:
    if path is None:
        return exact.DEFAULT_EVAL
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    if not isinstance(raw, dict) or set(raw) - {"eval", "special"}:
        raise UsageError('config must be an object with keys "eval" and/or "special"')
    try:
        special = SpecFunConfig(**raw.get("special", {}))
        return exact.EvalConfig(**raw.get("eval", {}), special=special)
    except TypeError as exc:
        raise UsageError(f"bad config entry: {exc}") from None


def _params(args) -> DistParams:
    return DistParams(args.mu_x, args.mu_y, args.sigma_x, args.sigma_y, args.rho, args.n)


def _seed(args) -> int:
    return _default_seed() if args.seed is None else args.seed


def _evaluate(args, cfg: exact.EvalConfig) -> dict:
    """Dispatch a pdf/tail/quantile request; returns the report fields."""
    params, x, mode = _params(args), args.point, args.mode
    out = {"quantity": args.command, "mode": mode, "point": x}
    if args.command == "pdf":
        fn = {"exact-series": exact.pdf_series, "exact-integral": exact.pdf_integral,
              "numeric": exact.pdf}.get(mode)
        out["value"] = (pdf_asym(params, x, TailSide(args.side), args.order) if fn is None
                        else fn(params, x, cfg))
    elif args.command == "tail":
        side = TailSide(args.side)
        if mode == "asym":
            out["value"] = tail_asym(params, x, side, args.order, args.variant)
        elif mode == "numeric":
            out["value"] = exact.tail(params, x, cfg) if side is TailSide.UPPER else exact.cdf(params, x, cfg)
        else:
            res = mc.empirical_tail(params, x, args.n_samples, mc.RandomStream(_seed(args), args.substream))
            out["value"] = res.estimate if side is TailSide.UPPER else 1.0 - res.estimate
            out["std_error"] = res.std_error
    else:
        if mode == "asym":
            res = quantile_asym(params, x, args.variant)
            out["value"], out["valid"] = res.value, res.valid
        elif mode == "numeric":
            out["value"] = exact.quantile_numeric(params, x, cfg)
        else:
            res = mc.empirical_quantile(params, x, args.n_samples,
                                        mc.RandomStream(_seed(args), args.substream))
            out["value"], out["std_error"] = res.estimate, res.std_error
    return out


def _fmt(v) -> str:
    return f"{v:.17g}" if isinstance(v, float) else str(v)


def _emit_record(rec: dict, output: str) -> str:
    if output == "json":
        return json.dumps(rec) + "\n"
    if output == "csv":
        return ",".join(rec) + "\n" + ",".join(_fmt(v) for v in rec.values()) + "\n"
    return "\n".join(f"{k}: {_fmt(v)}" for k, v in rec.items()) + "\n"


def _emit_samples(values, output: str) -> str:
    vals = [float(v) for v in values]
    if output == "json":
        return json.dumps(vals) + "\n"
    head = "value\n" if output == "csv" else ""
    return head + "".join(f"{v:.17g}\n" for v in vals)


def _emit_table(report: harness.TableReport, output: str) -> str:
    if output == "csv":
        return report.to_csv()
    if output == "json":
        return report.to_json() + "\n"
    return report.render() + "\n"


def run(args, cfg: exact.EvalConfig) -> str:
    if args.command == "sample":
        return _emit_samples(mc.sample_sn(_params(args), mc.RandomStream(_seed(args), args.substream),
                                          args.size), args.output)
    if args.command == "table":
        hcfg = harness.HarnessConfig(truth_mode=args.truth, n_samples=args.n_samples,
                                     seed=_seed(args), variant=args.variant, eval_cfg=cfg)
        return _emit_table(harness.reproduce_table(args.table_id, hcfg), args.output)
    return _emit_record(_evaluate(args, cfg), args.output)


def _fail(category: str, message: str, code: int) -> int:
    sys.stderr.write(json.dumps({"category": category, "message": message}) + "\n")
    return code


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        text = run(args, load_config(args.config))
    except UsageError as exc:
        return _fail(exc.category, str(exc), 2)
    except ProductNormalError as exc:
        return _fail(exc.category, str(exc), 1)
    except (ValueError, ArithmeticError) as exc:
        return _fail(ParameterError.category, str(exc), 1)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
