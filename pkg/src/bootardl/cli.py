"""Command-line entry point.

Subcommands: `study` (full pipeline), `unitroot`, `coint` (single model),
`diag`, `mc` (size/power harness), `export-data`. Exit codes: 0 success,
2 configuration error, 3 data error, 4 estimation failure.
"""

from __future__ import annotations

import argparse
import datetime as dt
import json
import sys
from pathlib import Path

from bootardl.errors import ConfigError, DataError, EstimationError


def _parse_window(raw: str) -> tuple[dt.date, dt.date]:
    try:
        start, _, end = raw.partition(":")
        return dt.date.fromisoformat(start), dt.date.fromisoformat(end)
    except ValueError as exc:
        raise ConfigError(f"--window must be START:END ISO dates, got {raw!r}") from exc


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", required=True, help="flat key = value config file")
    p.add_argument("--seed", type=int, help="overrides the config seed")
    p.add_argument("--reps", type=int, help="bootstrap replications")
    p.add_argument("--level", type=float, help="significance level")
    p.add_argument("--window", help="START:END (ISO dates)")
    p.add_argument("--count-mode", choices=["cumulative", "daily"], dest="count_mode")
    p.add_argument("--out", help="output directory")


def _load(args) -> "RunConfig":
    from bootardl.pipeline import load_config

    overrides: dict = {
        "seed": args.seed,
        "replications": args.reps,
        "level": args.level,
        "count_mode": getattr(args, "count_mode", None),
        "out_dir": args.out,
    }
    if args.window:
        start, end = _parse_window(args.window)
        overrides["window_start"] = start
        overrides["window_end"] = end
    return load_config(args.config, overrides)


def _cmd_study(args) -> int:
    from bootardl.pipeline import emit_report, run_study

    cfg = _load(args)
    report = run_study(cfg)
    formats = tuple(args.format.split(","))
    paths = emit_report(report, cfg.out_dir, formats)
    for p in paths:
        print(p)
    if report.aborted:
        survivors = [m.name for m in report.models if m.error is None]
        print(f"aborted models: {[m.name for m in report.aborted]}; "
              f"survivors: {survivors}", file=sys.stderr)
        return 4
    return 0


def _cmd_unitroot(args) -> int:
    from bootardl.ingest import SERIES_ORDER, StudyWindow, build_dataset
    from bootardl.pipeline import _unit_root_row

    cfg = _load(args)
    dataset = build_dataset(StudyWindow(cfg.window_start, cfg.window_end),
                            cfg.ecdc_csv, {"US": cfg.epu_us_csv, "UK": cfg.epu_uk_csv},
                            cfg.count_mode)
    rows = [_unit_root_row(dataset[name], cfg.level) for name in SERIES_ORDER]
    print(json.dumps(rows, indent=2))
    return 0


def _model_series(args, cfg):
    from bootardl.ingest import StudyWindow, build_dataset
    from bootardl.pipeline import parse_models

    ((dep, indep),) = parse_models(args.model)
    dataset = build_dataset(StudyWindow(cfg.window_start, cfg.window_end),
                            cfg.ecdc_csv, {"US": cfg.epu_us_csv, "UK": cfg.epu_uk_csv},
                            cfg.count_mode)
    return dataset[dep], dataset[indep]


def _cmd_coint(args) -> int:
    from bootardl.ardl import select_lags
    from bootardl.bootstrap import BootstrapConfig, coint_test

    cfg = _load(args)
    y, x = _model_series(args, cfg)
    spec = select_lags(y, x, cfg.p_max, cfg.q_max)
    res = coint_test(y, x, spec, BootstrapConfig(
        replications=cfg.replications, level=cfg.level, seed=cfg.seed))
    v = res.verdict
    print(json.dumps({
        "model": f"{y.name} ~ {x.name}",
        "lags": spec.label,
        "overall_f": v.statistics.overall_f, "cv_overall_f": v.critical_values.overall_f,
        "t_dep": v.statistics.t_dep, "cv_t_dep": v.critical_values.t_dep,
        "f_indep": v.statistics.f_indep, "cv_f_indep": v.critical_values.f_indep,
        "classification": v.classification.value,
        "narrative": v.narrative,
    }, indent=2))
    return 0


def _cmd_diag(args) -> int:
    from bootardl.ardl import fit_uecm, select_lags
    from bootardl.diagnostics import full_report

    cfg = _load(args)
    y, x = _model_series(args, cfg)
    spec = select_lags(y, x, cfg.p_max, cfg.q_max)
    uecm = fit_uecm(y, x, spec)
    rep = full_report(uecm.fit, uecm.design.X, uecm.design.y)
    out = {o.name: {"statistic": o.statistic, "p": o.pvalue} for o in rep.outcomes}
    out["cusum_stable"] = rep.stability.cusum_stable
    out["cusumsq_stable"] = rep.stability.cusumsq_stable
    print(json.dumps(out, indent=2))
    return 0


def _cmd_mc(args) -> int:
    from bootardl.pipeline import run_size_power

    res = run_size_power(args.dgp, runs=args.runs, T=args.T,
                         replications=args.reps, level=args.level, seed=args.seed)
    payload = {"dgp": res.dgp, "runs": res.runs, "T": res.T,
               "replications": res.replications, "level": res.level,
               **res.rates()}
    print(json.dumps(payload, indent=2))
    if args.out:
        Path(args.out).mkdir(parents=True, exist_ok=True)
        (Path(args.out) / f"mc_{args.dgp}.json").write_text(
            json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    return 0


def _cmd_export_data(args) -> int:
    from bootardl.pipeline import export_dataset

    cfg = _load(args)
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    path = out / "dataset.csv"
    export_dataset(cfg, path)
    print(path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bootardl",
                                     description="bootstrap ARDL cointegration pipeline")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("study", help="run the full study and emit reports")
    _common_flags(p)
    p.add_argument("--format", default="json,text,csv",
                   help="comma list from json,text,csv")
    p.set_defaults(func=_cmd_study)

    p = sub.add_parser("unitroot", help="unit-root table only")
    _common_flags(p)
    p.set_defaults(func=_cmd_unitroot)

    p = sub.add_parser("coint", help="bootstrap cointegration test for one model")
    _common_flags(p)
    p.add_argument("--model", required=True, help="e.g. lnEPU_US~lncases_US")
    p.set_defaults(func=_cmd_coint)

    p = sub.add_parser("diag", help="diagnostic battery for one model")
    _common_flags(p)
    p.add_argument("--model", required=True, help="e.g. lnEPU_US~lncases_US")
    p.set_defaults(func=_cmd_diag)

    p = sub.add_parser("mc", help="Monte Carlo size/power experiment")
    p.add_argument("--dgp", required=True,
                   choices=["null-i1", "null-i0", "cointegrated",
                            "degenerate-1", "degenerate-2"])
    p.add_argument("--runs", type=int, default=200)
    p.add_argument("--reps", type=int, default=500)
    p.add_argument("-T", type=int, default=80)
    p.add_argument("--level", type=float, default=0.05)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_mc)

    p = sub.add_parser("export-data", help="write the built dataset as a wide CSV")
    _common_flags(p)
    p.set_defaults(func=_cmd_export_data)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 3
    except EstimationError as exc:
        print(f"estimation failure: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
