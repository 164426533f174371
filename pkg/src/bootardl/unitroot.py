"""ADF and Phillips-Perron unit root tests plus integration-order screening.

The bootstrap cointegration procedure tolerates mixed I(0)/I(1) inputs but
breaks down for I(2) series, so `classify_integration` acts as the gate the
pipeline runs before any model is estimated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from bootardl.errors import SeriesTooShort
from bootardl.regress import RegressionFit, ols_fit, newey_west_lrv
from bootardl.series import TimeSeries

# MacKinnon (2010, "Critical Values for Cointegration Tests", Queen's
# Economics Dept WP 1227) response-surface coefficients for the univariate
# Dickey-Fuller t distribution: cv = b0 + b1/T + b2/T^2 + b3/T^3, evaluated
# at the effective regression sample size. Rows: 1%, 5%, 10%.
_MACKINNON_TAU = {
    "c": (
        (-3.43035, -6.5393, -16.786, -79.433),
        (-2.86154, -2.8903, -4.234, -40.040),
        (-2.56677, -1.5384, -2.809, 0.0),
    ),
    "ct": (
        (-3.95877, -9.0531, -28.428, -134.155),
        (-3.41049, -4.3904, -9.036, -45.374),
        (-3.12705, -2.5856, -3.925, -22.380),
    ),
}

LEVELS = (0.01, 0.05, 0.10)


def mackinnon_critical_values(spec: str, nobs: int) -> dict[float, float]:
    """Left-tail DF critical values at 1/5/10% for deterministic spec `spec`."""
    if spec not in _MACKINNON_TAU:
        raise ValueError(f"deterministic spec must be 'c' or 'ct', got {spec!r}")
    out = {}
    for level, coef in zip(LEVELS, _MACKINNON_TAU[spec]):
        b0, b1, b2, b3 = coef
        out[level] = b0 + b1 / nobs + b2 / nobs**2 + b3 / nobs**3
    return out


class Order(Enum):
    I0 = "I(0)"
    I1 = "I(1)"
    I2PLUS = "I(2)+"


@dataclass(frozen=True)
class UnitRootResult:
    """Outcome of one ADF or PP test."""

    test: str                     # "ADF" or "PP"
    series: str
    spec: str                     # "c" or "ct"
    lag_or_bandwidth: int
    statistic: float
    critical_values: dict[float, float]
    nobs: int

    def rejects(self, level: float = 0.05) -> bool:
        """Left-tail rejection of the unit-root null."""
        return self.statistic < self.critical_values[level]


@dataclass(frozen=True)
class IntegrationOrder:
    series: str
    order: Order
    level_result: UnitRootResult
    diff_result: UnitRootResult | None


def _df_design(y: np.ndarray, p: int, spec: str, start: int) -> tuple[np.ndarray, np.ndarray]:
    """Dickey-Fuller regression pieces for Delta y_t, t = start+1 .. T-1.

    `start` indexes the first usable Delta observation (0-based in the
    differenced series), letting candidates share a common sample.
    """
    dy = np.diff(y)
    n = dy.size - start
    rows = [np.ones(n), y[start:-1]]
    if spec == "ct":
        rows.insert(1, np.arange(start + 1, start + 1 + n, dtype=float))
    for i in range(1, p + 1):
        rows.append(dy[start - i:dy.size - i])
    X = np.column_stack(rows)
    return X, dy[start:]


def _rho_index(spec: str) -> int:
    # column order: const [, trend], y_{t-1}, dy lags
    return 2 if spec == "ct" else 1


def schwert_max_lag(nobs: int) -> int:
    """floor(12 * (T/100)^0.25), the Schwert rule."""
    return int(math.floor(12.0 * (nobs / 100.0) ** 0.25))


def adf_test(
    s: TimeSeries,
    spec: str = "c",
    max_lag: int | None = None,
) -> UnitRootResult:
    """Augmented Dickey-Fuller test with Schwarz-criterion lag selection.

    All candidate lag orders 0..max_lag are compared on the common sample
    trimmed to max_lag; the winner is refit on its own maximal sample and
    its t-ratio on the lagged level is the statistic.

    Raises
    ------
    SeriesTooShort
        If fewer than max_lag + 10 observations are available.
    RankDeficient
        Propagated from the DF regression (e.g. a constant series).
    """
    y = s.values
    T = y.size
    if max_lag is None:
        max_lag = schwert_max_lag(T)
    if T < max_lag + 10:
        raise SeriesTooShort(
            f"series {s.name!r}: {T} observations < max_lag + 10 = {max_lag + 10}"
        )

    best_p, best_sbc = 0, math.inf
    for p in range(0, max_lag + 1):
        X, dy = _df_design(y, p, spec, start=max_lag)
        fit = ols_fit(X, dy)
        sbc = fit.sbc()
        if sbc < best_sbc - 1e-12:
            best_sbc, best_p = sbc, p

    X, dy = _df_design(y, best_p, spec, start=best_p)
    fit = ols_fit(X, dy)
    idx = _rho_index(spec)
    stat = float(fit.params[idx] / fit.bse[idx])
    return UnitRootResult(
        test="ADF",
        series=s.name,
        spec=spec,
        lag_or_bandwidth=best_p,
        statistic=stat,
        critical_values=mackinnon_critical_values(spec, fit.nobs),
        nobs=fit.nobs,
    )


def newey_west_auto_bandwidth(nobs: int) -> int:
    """floor(4 * (T/100)^(2/9)), the Newey-West automatic rule."""
    return int(math.floor(4.0 * (nobs / 100.0) ** (2.0 / 9.0)))


def pp_test(
    s: TimeSeries,
    spec: str = "c",
    bandwidth: int | None = None,
) -> UnitRootResult:
    """Phillips-Perron Z-tau test.

    Fits the unaugmented DF regression, then corrects the t-ratio
    nonparametrically with the Bartlett long-run variance of its residuals:

        Z = sqrt(g0/l2) * t - (l2 - g0) / (2 sqrt(l2)) * T * se(rho) / s

    where g0 is the (1/T) residual variance, l2 the long-run variance and
    s^2 the OLS variance estimate. With bandwidth 0 the correction vanishes
    and Z equals the plain DF t-ratio.
    """
    y = s.values
    T = y.size
    if T < 20:
        raise SeriesTooShort(f"series {s.name!r}: PP test needs >= 20 observations, got {T}")

    X, dy = _df_design(y, 0, spec, start=0)
    fit = ols_fit(X, dy)
    n = fit.nobs
    if bandwidth is None:
        bandwidth = newey_west_auto_bandwidth(n)

    idx = _rho_index(spec)
    t_ratio = float(fit.params[idx] / fit.bse[idx])
    se_rho = float(fit.bse[idx])
    s_ols = math.sqrt(fit.sigma2)

    gamma0 = newey_west_lrv(fit.resid, 0)
    lam2 = newey_west_lrv(fit.resid, bandwidth)
    stat = (
        math.sqrt(gamma0 / lam2) * t_ratio
        - (lam2 - gamma0) / (2.0 * math.sqrt(lam2)) * n * se_rho / s_ols
    )
    return UnitRootResult(
        test="PP",
        series=s.name,
        spec=spec,
        lag_or_bandwidth=bandwidth,
        statistic=stat,
        critical_values=mackinnon_critical_values(spec, n),
        nobs=n,
    )


def classify_integration(
    s: TimeSeries,
    spec: str = "c",
    level: float = 0.05,
    max_lag: int | None = None,
) -> IntegrationOrder:
    """I(0)/I(1)/I(2)+ classification from ADF tests at level and first difference."""
    level_res = adf_test(s, spec=spec, max_lag=max_lag)
    if level_res.rejects(level):
        return IntegrationOrder(s.name, Order.I0, level_res, None)

    from bootardl.series import difference

    diff_res = adf_test(difference(s, 1), spec=spec, max_lag=max_lag)
    order = Order.I1 if diff_res.rejects(level) else Order.I2PLUS
    return IntegrationOrder(s.name, order, level_res, diff_res)
