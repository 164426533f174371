"""Configuration-driven study runner and the Monte Carlo size/power harness.

`run_study` executes the full sequence: integration-order screen over the ten
series (hard abort on any I(2)), lag selection, UECM estimation, bootstrap
critical values and verdict per model, then error-correction estimates and
diagnostics for the models found cointegrated. Everything is deterministic
given the configured seed; reports carry a content hash of the input files so
results are traceable to a data vintage.
"""

from __future__ import annotations

import datetime as dt
import hashlib
import json
import math
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from bootardl import __version__
from bootardl.ardl import ArdlSpec, EcmEstimates, ecm_estimates, select_lags
from bootardl.bootstrap import (
    BootstrapConfig,
    Classification,
    CointegrationResult,
    coint_test,
    nearest_rank_quantile,
)
from bootardl.diagnostics import DiagnosticsReport, full_report
from bootardl.errors import (
    BootArdlError,
    ConfigError,
    DataError,
    EstimationError,
)
from bootardl.ingest import SERIES_ORDER, StudyWindow, build_dataset, export_wide_csv
from bootardl.series import TimeSeries, difference
from bootardl.unitroot import Order, adf_test, classify_integration, pp_test

DEFAULT_MODELS: tuple[tuple[str, str], ...] = (
    ("lnEPU_US", "lncases_US"),
    ("lnEPU_US", "lndeaths_US"),
    ("lnEPU_US", "lncases_OUS"),
    ("lnEPU_US", "lndeaths_OUS"),
    ("lnEPU_UK", "lncases_UK"),
    ("lnEPU_UK", "lndeaths_UK"),
    ("lnEPU_UK", "lncases_OUK"),
    ("lnEPU_UK", "lndeaths_OUK"),
)


@dataclass(frozen=True)
class RunConfig:
    """Validated study configuration. The seed is mandatory: runs never fall
    back to wall-clock seeding."""

    ecdc_csv: str
    epu_us_csv: str
    epu_uk_csv: str
    seed: int
    window_start: dt.date = dt.date(2020, 3, 7)
    window_end: dt.date = dt.date(2020, 5, 24)
    replications: int = 2000
    level: float = 0.05
    p_max: int = 4
    q_max: int = 4
    count_mode: str = "cumulative"
    out_dir: str = "out"
    models: tuple[tuple[str, str], ...] = DEFAULT_MODELS

    def validate(self) -> None:
        for label, path in (("ecdc_csv", self.ecdc_csv),
                            ("epu_us_csv", self.epu_us_csv),
                            ("epu_uk_csv", self.epu_uk_csv)):
            if not Path(path).is_file():
                raise ConfigError(f"{label}: no such file: {path}")
        if self.count_mode not in ("cumulative", "daily"):
            raise ConfigError(f"count_mode must be cumulative or daily, got {self.count_mode!r}")
        if not 0.0 < self.level < 0.5:
            raise ConfigError(f"level must lie in (0, 0.5), got {self.level}")
        if self.replications < 100:
            raise ConfigError("replications must be >= 100")
        if self.window_start >= self.window_end:
            raise ConfigError("window_start must precede window_end")
        for dep, indep in self.models:
            for name in (dep, indep):
                if name not in SERIES_ORDER:
                    raise ConfigError(f"unknown series {name!r} in models")


_CONFIG_KEYS = {
    "ecdc_csv": str, "epu_us_csv": str, "epu_uk_csv": str,
    "seed": int, "replications": int, "p_max": int, "q_max": int,
    "level": float, "count_mode": str, "out_dir": str,
    "window_start": dt.date.fromisoformat, "window_end": dt.date.fromisoformat,
    "models": str,
}


def load_config(path, overrides: dict | None = None) -> RunConfig:
    """Parse a flat `key = value` file; `overrides` (from CLI flags) win."""
    values: dict = {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ConfigError(f"{path}:{lineno}: expected key = value, got {line!r}")
        key, _, raw = stripped.partition("=")
        key, raw = key.strip(), raw.strip()
        if key not in _CONFIG_KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        try:
            values[key] = _CONFIG_KEYS[key](raw)
        except ValueError as exc:
            raise ConfigError(f"{path}:{lineno}: bad value for {key}: {raw!r}") from exc
    values.update({k: v for k, v in (overrides or {}).items() if v is not None})
    if "models" in values and isinstance(values["models"], str):
        values["models"] = parse_models(values["models"])
    if "seed" not in values:
        raise ConfigError("seed is mandatory (no wall-clock seeding)")
    try:
        cfg = RunConfig(**values)
    except TypeError as exc:
        raise ConfigError(str(exc)) from exc
    cfg.validate()
    return cfg


def parse_models(raw: str) -> tuple[tuple[str, str], ...]:
    """Parse `dep~indep` pairs separated by commas."""
    models = []
    for item in raw.split(","):
        item = item.strip()
        if not item:
            continue
        if "~" not in item:
            raise ConfigError(f"model {item!r} must look like lnEPU_US~lncases_US")
        dep, _, indep = item.partition("~")
        models.append((dep.strip(), indep.strip()))
    if not models:
        raise ConfigError("empty model list")
    return tuple(models)


def data_fingerprint(paths: list[str]) -> dict[str, str]:
    out = {}
    for p in paths:
        h = hashlib.sha256()
        h.update(Path(p).read_bytes())
        out[Path(p).name] = h.hexdigest()
    return out


# --- report structure --------------------------------------------------------


def _stars_from_p(p: float) -> str:
    """Paper table convention: * for 1%, ** for 5%."""
    if p < 0.01:
        return "*"
    if p < 0.05:
        return "**"
    return ""


def _stars_from_cv(stat: float, cv1: float, cv5: float, upper: bool) -> str:
    if upper:
        return "*" if stat > cv1 else "**" if stat > cv5 else ""
    return "*" if stat < cv1 else "**" if stat < cv5 else ""


def _unitroot_cell(res) -> dict:
    return {
        "statistic": res.statistic,
        "lag_or_bandwidth": res.lag_or_bandwidth,
        "stars": _stars_from_cv(res.statistic, res.critical_values[0.01],
                                res.critical_values[0.05], upper=False),
        "critical_values": {f"{int(level * 100)}%": cv
                            for level, cv in res.critical_values.items()},
    }


def _coef_cell(c) -> dict:
    return {"value": c.value, "se": c.se, "t": c.tval, "p": c.pval,
            "stars": _stars_from_p(c.pval)}


@dataclass
class ModelRecord:
    name: str
    dependent: str
    independent: str
    spec: ArdlSpec | None = None
    result: CointegrationResult | None = None
    ecm: EcmEstimates | None = None
    diagnostics: DiagnosticsReport | None = None
    error: str | None = None


@dataclass
class StudyReport:
    config: RunConfig
    fingerprints: dict[str, str]
    unit_roots: list[dict]
    models: list[ModelRecord]
    notes: list[str] = field(default_factory=list)

    @property
    def cointegrated(self) -> list[ModelRecord]:
        return [m for m in self.models
                if m.result is not None and m.result.verdict.cointegrated]

    @property
    def aborted(self) -> list[ModelRecord]:
        return [m for m in self.models if m.error is not None]

    def to_dict(self) -> dict:
        cfg = self.config
        meta = {
            "package": "bootardl",
            "version": __version__,
            "seed": cfg.seed,
            "replications": cfg.replications,
            "level": cfg.level,
            "window": [cfg.window_start.isoformat(), cfg.window_end.isoformat()],
            "count_mode": cfg.count_mode,
            "p_max": cfg.p_max,
            "q_max": cfg.q_max,
            "data_fingerprint_sha256": self.fingerprints,
            "notes": list(self.notes),
        }
        model_rows = []
        for m in self.models:
            row: dict = {
                "model": m.name,
                "dependent": m.dependent,
                "independent": m.independent,
            }
            if m.error is not None:
                row["error"] = m.error
                model_rows.append(row)
                continue
            assert m.result is not None and m.spec is not None
            v = m.result.verdict
            cv = m.result.critical_values
            row.update({
                "lags": m.spec.label,
                "overall_f": {
                    "statistic": v.statistics.overall_f,
                    "cv": v.critical_values.overall_f,
                    "reject": v.overall_f_reject,
                    "stars": _stars_from_cv(
                        v.statistics.overall_f,
                        nearest_rank_quantile(cv.overall_f, 0.99),
                        nearest_rank_quantile(cv.overall_f, 0.95), upper=True),
                },
                "t_dep": {
                    "statistic": v.statistics.t_dep,
                    "cv": v.critical_values.t_dep,
                    "reject": v.t_dep_reject,
                    "stars": _stars_from_cv(
                        v.statistics.t_dep,
                        nearest_rank_quantile(cv.t_dep, 0.01),
                        nearest_rank_quantile(cv.t_dep, 0.05), upper=False),
                },
                "f_indep": {
                    "statistic": v.statistics.f_indep,
                    "cv": v.critical_values.f_indep,
                    "reject": v.f_indep_reject,
                    "stars": _stars_from_cv(
                        v.statistics.f_indep,
                        nearest_rank_quantile(cv.f_indep, 0.99),
                        nearest_rank_quantile(cv.f_indep, 0.95), upper=True),
                },
                "bootstrap_failures": cv.failures,
                "classification": v.classification.value,
                "cointegrated": v.cointegrated,
                "narrative": v.narrative,
            })
            if m.ecm is not None:
                row["ecm"] = {
                    "short_run": {c.name: _coef_cell(c) for c in m.ecm.shortrun},
                    "ect": _coef_cell(m.ecm.ect),
                    "long_run": _coef_cell(m.ecm.theta),
                    "constant": _coef_cell(m.ecm.const) if m.ecm.const else None,
                }
            if m.diagnostics is not None:
                d = m.diagnostics
                row["diagnostics"] = {
                    **{o.name: {"statistic": o.statistic, "p": o.pvalue}
                       for o in d.outcomes},
                    "cusum_stable": d.stability.cusum_stable,
                    "cusumsq_stable": d.stability.cusumsq_stable,
                }
            model_rows.append(row)
        return {"metadata": meta, "unit_roots": self.unit_roots, "models": model_rows}


# --- study ---------------------------------------------------------------


def _unit_root_row(s: TimeSeries, level: float) -> dict:
    cls = classify_integration(s, level=level)
    adf_level = cls.level_result
    adf_diff = cls.diff_result
    pp_level = pp_test(s)
    pp_diff = None
    if not pp_level.rejects(level):
        pp_diff = pp_test(difference(s, 1))
    return {
        "series": s.name,
        "adf_level": _unitroot_cell(adf_level),
        "adf_diff": _unitroot_cell(adf_diff) if adf_diff else None,
        "pp_level": _unitroot_cell(pp_level),
        "pp_diff": _unitroot_cell(pp_diff) if pp_diff else None,
        "order": cls.order.value,
        "adf_pp_disagree": adf_level.rejects(level) != pp_level.rejects(level),
    }


def run_study(cfg: RunConfig) -> StudyReport:
    """Execute the full study. Raises on config/data problems and on the
    I(2) gate; per-model estimation failures are recorded, not raised."""
    cfg.validate()
    window = StudyWindow(cfg.window_start, cfg.window_end)
    dataset = build_dataset(
        window, cfg.ecdc_csv,
        {"US": cfg.epu_us_csv, "UK": cfg.epu_uk_csv},
        count_mode=cfg.count_mode,
    )

    notes = []
    if cfg.replications < 1000:
        notes.append(
            f"bootstrap uses B={cfg.replications} replications; critical "
            "values are less precise than at the default B=2000"
        )

    unit_rows = []
    for name in SERIES_ORDER:
        row = _unit_root_row(dataset[name], cfg.level)
        unit_rows.append(row)
        if row["order"] == Order.I2PLUS.value:
            raise EstimationError(
                f"series {name} classified {Order.I2PLUS.value}: the bootstrap "
                "ARDL procedure is invalid with I(2) variables; aborting"
            )

    model_seeds = np.random.SeedSequence(cfg.seed).generate_state(len(cfg.models))
    records = []
    for i, (dep, indep) in enumerate(cfg.models):
        rec = ModelRecord(name=str(i + 1), dependent=dep, independent=indep)
        records.append(rec)
        y, x = dataset[dep], dataset[indep]
        try:
            rec.spec = select_lags(y, x, cfg.p_max, cfg.q_max)
            bcfg = BootstrapConfig(replications=cfg.replications, level=cfg.level,
                                   seed=int(model_seeds[i]))
            rec.result = coint_test(y, x, rec.spec, bcfg)
            if rec.result.verdict.cointegrated:
                rec.ecm = ecm_estimates(rec.result.uecm)
                design = rec.result.uecm.design
                rec.diagnostics = full_report(rec.result.uecm.fit, design.X, design.y)
        except BootArdlError as exc:
            rec.error = f"{type(exc).__name__}: {exc}"

    return StudyReport(
        config=cfg,
        fingerprints=data_fingerprint([cfg.ecdc_csv, cfg.epu_us_csv, cfg.epu_uk_csv]),
        unit_roots=unit_rows,
        models=records,
        notes=notes,
    )


# --- emission --------------------------------------------------------------


def _fmt_stat(value: float, stars: str = "", width: int = 12) -> str:
    return f"{value:.3f}{stars}".rjust(width)


def render_text(report: StudyReport) -> str:
    """Fixed-width text tables mirroring the study's presentation."""
    lines: list[str] = []
    cfg = report.config
    lines.append("bootardl study report")
    lines.append(f"seed={cfg.seed}  B={cfg.replications}  level={cfg.level}  "
                 f"window={cfg.window_start}..{cfg.window_end}  mode={cfg.count_mode}")
    for note in report.notes:
        lines.append(f"note: {note}")
    lines.append("")

    lines.append("Unit root tests (* 1%, ** 5%)")
    header = (f"{'series':<14}{'ADF level':>14}{'ADF diff':>14}"
              f"{'PP level':>14}{'PP diff':>14}  order")
    lines.append(header)
    lines.append("-" * len(header))
    for row in report.unit_roots:
        def cell(c):
            if c is None:
                return f"{'-':>14}"
            return _fmt_stat(c["statistic"], c["stars"], 14)
        flag = "  [ADF/PP disagree]" if row["adf_pp_disagree"] else ""
        lines.append(f"{row['series']:<14}{cell(row['adf_level'])}{cell(row['adf_diff'])}"
                     f"{cell(row['pp_level'])}{cell(row['pp_diff'])}  {row['order']}{flag}")
    lines.append("")

    lines.append("Bootstrap cointegration tests (* 1%, ** 5%; CV at the run level)")
    header = (f"{'model':<30}{'lags':>6}{'overall F':>12}{'5% CV':>9}"
              f"{'t-dep':>12}{'5% CV':>9}{'F-indep':>12}{'5% CV':>9}  verdict")
    lines.append(header)
    lines.append("-" * len(header))
    for m in report.models:
        label = f"{m.name}) {m.dependent} ~ {m.independent}"
        if m.error is not None:
            lines.append(f"{label:<30}  ABORTED: {m.error}")
            continue
        v = m.result.verdict
        lines.append(
            f"{label:<30}{m.spec.label:>6}"
            + _fmt_stat(v.statistics.overall_f, _model_stars(m, 'overall_f'))
            + f"{v.critical_values.overall_f:>9.3f}"
            + _fmt_stat(v.statistics.t_dep, _model_stars(m, 't_dep'))
            + f"{v.critical_values.t_dep:>9.3f}"
            + _fmt_stat(v.statistics.f_indep, _model_stars(m, 'f_indep'))
            + f"{v.critical_values.f_indep:>9.3f}"
            + f"  {v.classification.value}"
        )
    lines.append("")

    if report.cointegrated:
        lines.append("Long- and short-run estimates for cointegrated models (* 1%, ** 5%)")
        for m in report.cointegrated:
            e = m.ecm
            lines.append(f"{m.name}) {m.dependent} ~ {m.independent}   lags {m.spec.label}")
            cells = [f"{c.name} {c.value:.3f}{_stars_from_p(c.pval)}" for c in e.shortrun]
            cells.append(f"ECT[t-1] {e.ect.value:.3f}{_stars_from_p(e.ect.pval)}")
            cells.append(f"{e.theta.name} {e.theta.value:.3f}{_stars_from_p(e.theta.pval)}")
            if e.const is not None:
                cells.append(f"const {e.const.value:.3f}{_stars_from_p(e.const.pval)}")
            lines.append("    " + "   ".join(cells))
        lines.append("")

        lines.append("Diagnostics for cointegrated models (statistic, p-value)")
        header = (f"{'model':<30}{'LM':>16}{'White':>16}{'Ramsey':>16}"
                  f"{'JB':>16}{'ARCH':>16}  stability")
        lines.append(header)
        lines.append("-" * len(header))
        for m in report.cointegrated:
            d = m.diagnostics
            cells = "".join(f"{o.statistic:>8.3f} ({o.pvalue:.3f})" for o in d.outcomes)
            stab = ("stable" if d.stability.cusum_stable and d.stability.cusumsq_stable
                    else "UNSTABLE")
            lines.append(f"{m.name}) {m.dependent} ~ {m.independent:<12}{cells}  {stab}")
        lines.append("")

    if report.aborted:
        survivors = [m.name for m in report.models if m.error is None]
        lines.append(f"aborted models: {[m.name for m in report.aborted]}; "
                     f"survivors: {survivors}")
    return "\n".join(lines) + "\n"


def _model_stars(m: ModelRecord, which: str) -> str:
    cv = m.result.critical_values
    v = m.result.verdict.statistics
    if which == "overall_f":
        return _stars_from_cv(v.overall_f, nearest_rank_quantile(cv.overall_f, 0.99),
                              nearest_rank_quantile(cv.overall_f, 0.95), upper=True)
    if which == "t_dep":
        return _stars_from_cv(v.t_dep, nearest_rank_quantile(cv.t_dep, 0.01),
                              nearest_rank_quantile(cv.t_dep, 0.05), upper=False)
    return _stars_from_cv(v.f_indep, nearest_rank_quantile(cv.f_indep, 0.99),
                          nearest_rank_quantile(cv.f_indep, 0.95), upper=True)


def emit_report(report: StudyReport, out_dir, formats: tuple[str, ...] = ("json", "text", "csv")) -> list[Path]:
    """Write the report in the requested formats; returns the paths written."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    if "json" in formats:
        p = out / "report.json"
        p.write_text(json.dumps(report.to_dict(), indent=2) + "\n", encoding="utf-8")
        written.append(p)
    if "text" in formats:
        p = out / "report.txt"
        p.write_text(render_text(report), encoding="utf-8")
        written.append(p)
    if "csv" in formats:
        written.extend(_emit_csv_bundle(report, out))
    return written


def _emit_csv_bundle(report: StudyReport, out: Path) -> list[Path]:
    written = []
    p = out / "unit_roots.csv"
    with open(p, "w", encoding="utf-8") as fh:
        fh.write("series,adf_level,adf_lags,adf_diff,pp_level,pp_bandwidth,"
                 "pp_diff,order,adf_pp_disagree\n")
        for row in report.unit_roots:
            def stat(c):
                return repr(c["statistic"]) if c else ""
            fh.write(
                f"{row['series']},{stat(row['adf_level'])},"
                f"{row['adf_level']['lag_or_bandwidth']},{stat(row['adf_diff'])},"
                f"{stat(row['pp_level'])},{row['pp_level']['lag_or_bandwidth']},"
                f"{stat(row['pp_diff'])},{row['order']},{row['adf_pp_disagree']}\n"
            )
    written.append(p)

    p = out / "cointegration.csv"
    with open(p, "w", encoding="utf-8") as fh:
        fh.write("model,dependent,independent,lags,overall_f,cv_overall_f,"
                 "t_dep,cv_t_dep,f_indep,cv_f_indep,classification,cointegrated\n")
        for m in report.models:
            if m.error is not None:
                fh.write(f"{m.name},{m.dependent},{m.independent},"
                         f"ERROR,,,,,,,{m.error!r},\n")
                continue
            v = m.result.verdict
            fh.write(
                f"{m.name},{m.dependent},{m.independent},\"{m.spec.label}\","
                f"{v.statistics.overall_f!r},{v.critical_values.overall_f!r},"
                f"{v.statistics.t_dep!r},{v.critical_values.t_dep!r},"
                f"{v.statistics.f_indep!r},{v.critical_values.f_indep!r},"
                f"{v.classification.value},{v.cointegrated}\n"
            )
    written.append(p)

    if report.cointegrated:
        p = out / "ecm.csv"
        with open(p, "w", encoding="utf-8") as fh:
            fh.write("model,term,value,se,t,p\n")
            for m in report.cointegrated:
                e = m.ecm
                terms = [*e.shortrun, e.ect, e.theta]
                if e.const is not None:
                    terms.append(e.const)
                for c in terms:
                    fh.write(f"{m.name},{c.name},{c.value!r},{c.se!r},{c.tval!r},{c.pval!r}\n")
        written.append(p)

        p = out / "diagnostics.csv"
        with open(p, "w", encoding="utf-8") as fh:
            fh.write("model,test,statistic,p\n")
            for m in report.cointegrated:
                for o in m.diagnostics.outcomes:
                    fh.write(f"{m.name},{o.name},{o.statistic!r},{o.pvalue!r}\n")
        written.append(p)

        for m in report.cointegrated:
            for which in ("cusum", "cusumsq"):
                p = out / f"{which}_model{m.name}.csv"
                m.diagnostics.stability.to_csv(p, which=which)
                written.append(p)
    return written


def export_dataset(cfg: RunConfig, path) -> None:
    """Write the ten built series as one wide audit CSV."""
    window = StudyWindow(cfg.window_start, cfg.window_end)
    dataset = build_dataset(window, cfg.ecdc_csv,
                            {"US": cfg.epu_us_csv, "UK": cfg.epu_uk_csv},
                            count_mode=cfg.count_mode)
    export_wide_csv(dataset, path)


# --- Monte Carlo size/power harness -----------------------------------------

DGP_NAMES = ("null-i1", "null-i0", "cointegrated", "degenerate-1", "degenerate-2")


def draw_dgp(name: str, T: int, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    """Simulate one (y, x) pair of length T from a named design.

    null-i1:      independent random walks (joint null holds).
    null-i0:      independent stationary AR(1)s, phi = 0.5.
    cointegrated: x a random walk, y error-corrects to 0.5 x at speed 0.5.
    degenerate-1: y stationary around a constant, x an unrelated random walk.
    degenerate-2: y accumulates a stationary x (dependent level absent).
    """
    burn = 50
    n = T + burn
    ey = rng.standard_normal(n)
    ex = rng.standard_normal(n)
    if name == "null-i1":
        y = np.cumsum(ey)
        x = np.cumsum(ex)
    elif name == "null-i0":
        y = _ar1(ey, 0.5)
        x = _ar1(ex, 0.5)
    elif name == "cointegrated":
        x = np.cumsum(ex)
        y = np.empty(n)
        y[0] = 0.5 * x[0]
        for t in range(1, n):
            y[t] = y[t - 1] - 0.5 * (y[t - 1] - 0.5 * x[t - 1]) + 0.3 * (x[t] - x[t - 1]) + ey[t]
    elif name == "degenerate-1":
        y = _ar1(ey, 0.5)
        x = np.cumsum(ex)
    elif name == "degenerate-2":
        x = _ar1(ex, 0.5)
        y = np.empty(n)
        y[0] = ey[0]
        for t in range(1, n):
            y[t] = y[t - 1] + 0.5 * x[t - 1] + ey[t]
    else:
        raise ConfigError(f"unknown DGP {name!r}; choose from {DGP_NAMES}")
    return y[-T:], x[-T:]


def _ar1(e: np.ndarray, phi: float) -> np.ndarray:
    y = np.empty(e.size)
    y[0] = e[0] / math.sqrt(1.0 - phi**2)
    for t in range(1, e.size):
        y[t] = phi * y[t - 1] + e[t]
    return y


@dataclass(frozen=True)
class SizePowerResult:
    dgp: str
    runs: int
    T: int
    replications: int
    level: float
    classification_counts: dict[str, int]
    reject_counts: dict[str, int]

    @property
    def cointegration_rate(self) -> float:
        return self.classification_counts.get(Classification.COINTEGRATED.value, 0) / self.runs

    def rates(self) -> dict[str, float]:
        out = {f"class_{k}": v / self.runs for k, v in self.classification_counts.items()}
        out.update({f"reject_{k}": v / self.runs for k, v in self.reject_counts.items()})
        out["cointegration_rate"] = self.cointegration_rate
        return out


def run_size_power(
    dgp: str,
    runs: int = 200,
    T: int = 80,
    replications: int = 500,
    level: float = 0.05,
    seed: int = 0,
    spec: tuple[int, int] = (1, 1),
) -> SizePowerResult:
    """Outer Monte Carlo: draw a fresh dataset per run, run the full
    bootstrap verdict on it (fixed ARDL spec), tally the outcomes."""
    if dgp not in DGP_NAMES:
        raise ConfigError(f"unknown DGP {dgp!r}; choose from {DGP_NAMES}")
    seeds = np.random.SeedSequence(seed).generate_state(2 * runs)
    class_counts: dict[str, int] = {c.value: 0 for c in Classification}
    rej_counts = {"overall_f": 0, "t_dep": 0, "f_indep": 0}
    origin = dt.date(2020, 1, 1)
    for r in range(runs):
        rng = np.random.default_rng(int(seeds[2 * r]))
        yv, xv = draw_dgp(dgp, T, rng)
        y = TimeSeries("y", origin, yv)
        x = TimeSeries("x", origin, xv)
        aspec = ArdlSpec("y", "x", spec[0], spec[1])
        cfg = BootstrapConfig(replications=replications, level=level,
                              seed=int(seeds[2 * r + 1]))
        res = coint_test(y, x, aspec, cfg)
        v = res.verdict
        class_counts[v.classification.value] += 1
        rej_counts["overall_f"] += v.overall_f_reject
        rej_counts["t_dep"] += v.t_dep_reject
        rej_counts["f_indep"] += v.f_indep_reject
    return SizePowerResult(
        dgp=dgp, runs=runs, T=T, replications=replications, level=level,
        classification_counts=class_counts, reject_counts=rej_counts,
    )
