"""Bootstrap cointegration test for the bivariate ARDL/UECM.

Pseudo-data are simulated under the joint null (both lagged levels excluded),
the UECM is re-estimated on every replication, and the empirical distribution
of three statistics is harvested: the overall F on both levels, the t-ratio
on the dependent level, and the F on the independent level. Cointegration is
declared only when all three reject; the two partial-rejection patterns are
the degenerate cases and count as no cointegration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from bootardl.ardl import ArdlSpec, UECMFit, build_uecm_matrix, fit_uecm
from bootardl.errors import BootstrapFailure, EstimationError
from bootardl.regress import LinearRestriction, RegressionFit, ols_fit, t_statistic, wald_f
from bootardl.series import TimeSeries, align


@dataclass(frozen=True)
class BootstrapConfig:
    """Replication count, test level, seed, and resampling mode."""

    replications: int = 2000
    level: float = 0.05
    seed: int = 0
    paired: bool = False          # draw y/x residuals as rows instead of independently
    max_failure_share: float = 0.05

    def __post_init__(self) -> None:
        if self.replications < 100:
            raise ValueError("need at least 100 bootstrap replications")
        if not 0.0 < self.level < 0.5:
            raise ValueError("significance level must lie in (0, 0.5)")


@dataclass(frozen=True)
class StatTriple:
    """The three cointegration statistics (or their critical values)."""

    overall_f: float
    t_dep: float
    f_indep: float


@dataclass(frozen=True)
class BootstrapCriticalValues:
    """Empirical quantiles plus the full replication vectors for reporting."""

    cv: StatTriple
    overall_f: np.ndarray
    t_dep: np.ndarray
    f_indep: np.ndarray
    failures: int
    level: float


class Classification(Enum):
    COINTEGRATED = "cointegrated"
    DEGENERATE_1 = "degenerate-case-1"
    DEGENERATE_2 = "degenerate-case-2"
    NO_COINTEGRATION = "no-cointegration"


@dataclass(frozen=True)
class CointegrationVerdict:
    statistics: StatTriple
    critical_values: StatTriple
    overall_f_reject: bool
    t_dep_reject: bool
    f_indep_reject: bool
    classification: Classification
    narrative: str

    @property
    def cointegrated(self) -> bool:
        return self.classification is Classification.COINTEGRATED


@dataclass(frozen=True)
class NullDgp:
    """Restricted data-generating pair used to simulate under the null.

    The dependent equation is the UECM stripped of both level terms (a pure
    differences regression); the marginal equation is an autoregression in
    differences for the regressor. Residuals are stored centered.
    """

    spec: ArdlSpec
    y_fit: RegressionFit
    x_fit: RegressionFit
    y_resid: np.ndarray           # centered
    x_resid: np.ndarray           # centered
    y_values: np.ndarray          # actual aligned levels
    x_values: np.ndarray


def _restricted_matrix(yv: np.ndarray, xv: np.ndarray, spec: ArdlSpec) -> tuple[np.ndarray, np.ndarray]:
    """UECM design minus the two level columns: const + (p-1) + q regressors."""
    X, dy = build_uecm_matrix(yv, xv, spec)
    return X[:, :-2], dy


def _marginal_matrix(xv: np.ndarray, q: int) -> tuple[np.ndarray, np.ndarray]:
    """Delta x_t on const and its own q lagged differences."""
    dx = np.diff(xv)
    start = q  # first usable index in the differenced series
    n = dx.size - start
    rows = [np.ones(n)]
    for i in range(1, q + 1):
        rows.append(dx[start - i:dx.size - i])
    return np.column_stack(rows), dx[start:]


def null_dgp(y: TimeSeries, x: TimeSeries, spec: ArdlSpec) -> NullDgp:
    """Estimate the restricted pair and store centered residual pools."""
    ya, xa = align([y, x])
    yv, xv = ya.values, xa.values
    Xr, dyr = _restricted_matrix(yv, xv, spec)
    y_fit = ols_fit(Xr, dyr)
    Xm, dxm = _marginal_matrix(xv, spec.q)
    x_fit = ols_fit(Xm, dxm)
    return NullDgp(
        spec=spec,
        y_fit=y_fit,
        x_fit=x_fit,
        y_resid=y_fit.resid - y_fit.resid.mean(),
        x_resid=x_fit.resid - x_fit.resid.mean(),
        y_values=yv,
        x_values=xv,
    )


def _rebuild_pseudo(
    dgp: NullDgp, u: np.ndarray, v: np.ndarray, start: int
) -> tuple[np.ndarray, np.ndarray]:
    """Recursive reconstruction under the null from the actual initial levels.

    The regressor path is built first (its equation is marginal), then the
    dependent path, whose equation uses the contemporaneous pseudo
    difference of the regressor.
    """
    spec = dgp.spec
    T = dgp.y_values.size
    p, q = spec.p, spec.q
    off = 1 if spec.constant else 0

    xs = dgp.x_values.copy()
    cx = dgp.x_fit.params[0]
    psi = dgp.x_fit.params[1:]
    for t in range(start, T):
        dx_t = cx + v[t - start]
        for i in range(1, q + 1):
            dx_t += psi[i - 1] * (xs[t - i] - xs[t - i - 1])
        xs[t] = xs[t - 1] + dx_t

    ys = dgp.y_values.copy()
    cy = dgp.y_fit.params[0] if spec.constant else 0.0
    alpha = dgp.y_fit.params[off:off + p - 1]          # d(y) lags 1..p-1
    beta = dgp.y_fit.params[off + p - 1:off + p - 1 + q]   # d(x) lags 0..q-1
    for t in range(start, T):
        dy_t = cy + u[t - start]
        for i in range(1, p):
            dy_t += alpha[i - 1] * (ys[t - i] - ys[t - i - 1])
        for j in range(0, q):
            dy_t += beta[j] * (xs[t - j] - xs[t - j - 1])
        ys[t] = ys[t - 1] + dy_t
    return ys, xs


def statistics_from_fit(fit: RegressionFit) -> StatTriple:
    """Overall F on both level terms, t on the dependent level, F on the
    independent level; level columns are the last two by construction."""
    k = fit.nparams
    i1, i2 = k - 2, k - 1
    overall = wald_f(fit, LinearRestriction.zeros([i1, i2], k))
    t_dep = t_statistic(fit, i1)
    f_ind = wald_f(fit, LinearRestriction.zeros([i2], k))
    return StatTriple(overall_f=overall, t_dep=t_dep, f_indep=f_ind)


def nearest_rank_quantile(values: np.ndarray, prob: float) -> float:
    """Smallest order statistic with at least prob * B mass at or below it."""
    ordered = np.sort(values)
    rank = max(1, math.ceil(prob * ordered.size))
    return float(ordered[rank - 1])


def bootstrap_critical_values(
    y: TimeSeries, x: TimeSeries, spec: ArdlSpec, cfg: BootstrapConfig
) -> BootstrapCriticalValues:
    """Simulate B null replications and return empirical critical values.

    Deterministic given cfg.seed: replication b draws from its own substream
    derived from (seed, b), so results do not depend on evaluation order.
    Replications whose pseudo-sample cannot be estimated are redrawn from the
    same substream and counted; more than max_failure_share * B aborts.
    """
    dgp = null_dgp(y, x, spec)
    B = cfg.replications
    T = dgp.y_values.size
    start = max(spec.p, spec.q + 1)
    n_draws = T - start

    f_all = np.empty(B)
    t_all = np.empty(B)
    fi_all = np.empty(B)
    failures = 0
    max_failures = int(cfg.max_failure_share * B)

    n_u, n_v = dgp.y_resid.size, dgp.x_resid.size
    for b in range(B):
        rng = np.random.default_rng(np.random.SeedSequence(entropy=cfg.seed, spawn_key=(b,)))
        while True:
            if cfg.paired:
                m = min(n_u, n_v)
                idx = rng.integers(0, m, size=n_draws)
                u = dgp.y_resid[n_u - m:][idx]
                v = dgp.x_resid[n_v - m:][idx]
            else:
                u = dgp.y_resid[rng.integers(0, n_u, size=n_draws)]
                v = dgp.x_resid[rng.integers(0, n_v, size=n_draws)]
            ys, xs = _rebuild_pseudo(dgp, u, v, start)
            try:
                fit, _, _ = _fit_arrays(ys, xs, spec)
            except EstimationError:
                failures += 1
                if failures > max_failures:
                    raise BootstrapFailure(
                        f"{failures} of {b + 1} bootstrap replications failed "
                        f"(> {cfg.max_failure_share:.0%} of B={B})"
                    )
                continue
            trip = statistics_from_fit(fit)
            f_all[b], t_all[b], fi_all[b] = trip.overall_f, trip.t_dep, trip.f_indep
            break

    cv = StatTriple(
        overall_f=nearest_rank_quantile(f_all, 1.0 - cfg.level),
        t_dep=nearest_rank_quantile(t_all, cfg.level),
        f_indep=nearest_rank_quantile(fi_all, 1.0 - cfg.level),
    )
    return BootstrapCriticalValues(
        cv=cv, overall_f=f_all, t_dep=t_all, f_indep=fi_all,
        failures=failures, level=cfg.level,
    )


def _fit_arrays(ys: np.ndarray, xs: np.ndarray, spec: ArdlSpec):
    X, dy = build_uecm_matrix(ys, xs, spec)
    return ols_fit(X, dy), X, dy


def decide(statistics: StatTriple, cvs: StatTriple) -> CointegrationVerdict:
    """Apply the three rejection rules and classify the outcome.

    Both F tests reject above their critical values; the t test rejects
    below its. Every flag combination maps to exactly one class and only
    triple rejection yields cointegration.
    """
    f_rej = statistics.overall_f > cvs.overall_f
    t_rej = statistics.t_dep < cvs.t_dep
    fi_rej = statistics.f_indep > cvs.f_indep

    if f_rej and t_rej and fi_rej:
        cls = Classification.COINTEGRATED
        note = "all three tests reject: long-run relationship confirmed"
    elif f_rej and t_rej:
        cls = Classification.DEGENERATE_1
        note = ("overall F and dependent-level t reject but the independent "
                "level is insignificant: degenerate case, no cointegration")
    elif f_rej:
        cls = Classification.DEGENERATE_2
        note = ("overall F rejects but the dependent-level t does not: "
                "degenerate case, no cointegration")
    else:
        cls = Classification.NO_COINTEGRATION
        note = "overall F does not reject: no cointegration"
    return CointegrationVerdict(
        statistics=statistics,
        critical_values=cvs,
        overall_f_reject=f_rej,
        t_dep_reject=t_rej,
        f_indep_reject=fi_rej,
        classification=cls,
        narrative=note,
    )


@dataclass(frozen=True)
class CointegrationResult:
    """Everything the pipeline needs for one model: fit, CVs, verdict."""

    spec: ArdlSpec
    uecm: UECMFit
    critical_values: BootstrapCriticalValues
    verdict: CointegrationVerdict


def coint_test(
    y: TimeSeries, x: TimeSeries, spec: ArdlSpec, cfg: BootstrapConfig
) -> CointegrationResult:
    """Full bootstrap cointegration test of y on x at the given lag spec."""
    uecm = fit_uecm(y, x, spec)
    stats = statistics_from_fit(uecm.fit)
    cvs = bootstrap_critical_values(y, x, spec, cfg)
    verdict = decide(stats, cvs.cv)
    return CointegrationResult(spec=spec, uecm=uecm, critical_values=cvs, verdict=verdict)
