"""Residual diagnostic battery and recursive-stability paths.

Serial correlation (Breusch-Godfrey), heteroscedasticity (White without
cross terms), functional form (Ramsey RESET), normality (Jarque-Bera),
conditional heteroscedasticity (ARCH LM), and CUSUM / CUSUM-of-squares
paths with 5% significance bands.

All LM-family statistics are reported in their small-sample F form by
default; the chi-square variant is available behind `form="chi2"`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import stats

from bootardl.errors import (
    InvalidLagCount,
    NoRegressorsToTest,
    SeriesTooShort,
)
from bootardl.regress import RegressionFit, ols_fit, recursive_residuals

# CUSUM band: +-a * [sqrt(n-k) + 2 (t-k)/sqrt(n-k)] with a from
# Brown-Durbin-Evans (1975), sec. 2.3.
_CUSUM_A = {0.01: 1.143, 0.05: 0.948, 0.10: 0.850}

# CUSUMSQ band offset c0, indexed by m = (n-k)/2 - 1 (m = 1 first). Solves
# Durbin's one-sided ordered-uniform boundary-crossing probability at 0.025
# per line, the Brown-Durbin-Evans convention for a 5% two-sided band;
# computed exactly by tools/durbin_c0.py and cross-checked by Monte Carlo.
_DURBIN_C0_5PCT = (
    0.47500, 0.50855, 0.46702, 0.44641, 0.42174, 0.40045,
    0.38294, 0.36697, 0.35277, 0.34022, 0.32894, 0.31869,
    0.30935, 0.30081, 0.29296, 0.28570, 0.27897, 0.27270,
    0.26685, 0.26137, 0.25622, 0.25136, 0.24679, 0.24245,
    0.23835, 0.23445, 0.23074, 0.22721, 0.22383, 0.22061,
    0.21752, 0.21457, 0.21173, 0.20901, 0.20639, 0.20387,
    0.20144, 0.19910, 0.19684, 0.19465, 0.19254, 0.19050,
    0.18852, 0.18661, 0.18475, 0.18295, 0.18120, 0.17950,
    0.17785, 0.17624, 0.17468, 0.17316, 0.17168, 0.17024,
    0.16884, 0.16746, 0.16613, 0.16482, 0.16355, 0.16230,
    0.16109, 0.15990, 0.15874, 0.15760, 0.15649, 0.15540,
    0.15433, 0.15329, 0.15227, 0.15127, 0.15028, 0.14932,
    0.14838, 0.14745, 0.14654, 0.14565, 0.14478, 0.14392,
    0.14307, 0.14224, 0.14143, 0.14063, 0.13984, 0.13907,
    0.13831, 0.13756, 0.13682, 0.13610, 0.13538, 0.13468,
    0.13399, 0.13331, 0.13264, 0.13198, 0.13133, 0.13070,
    0.13006, 0.12944, 0.12883, 0.12823, 0.12763, 0.12705,
    0.12647, 0.12590, 0.12534, 0.12478, 0.12423, 0.12369,
    0.12316, 0.12263, 0.12211, 0.12160, 0.12109, 0.12059,
    0.12010, 0.11961, 0.11913, 0.11865, 0.11818, 0.11772,
    0.11726, 0.11681, 0.11636, 0.11592, 0.11548, 0.11504,
    0.11462, 0.11419, 0.11377, 0.11336, 0.11295, 0.11255,
    0.11215, 0.11175, 0.11136, 0.11097, 0.11059, 0.11021,
    0.10983, 0.10946, 0.10909, 0.10873, 0.10837, 0.10801,
    0.10765, 0.10730, 0.10696, 0.10661, 0.10627, 0.10594,
)


@dataclass(frozen=True)
class TestOutcome:
    name: str
    statistic: float
    pvalue: float


@dataclass(frozen=True)
class StabilityPaths:
    """CUSUM and CUSUMSQ paths with their significance bands."""

    cusum: np.ndarray
    cusum_lower: np.ndarray
    cusum_upper: np.ndarray
    cusumsq: np.ndarray
    cusumsq_lower: np.ndarray
    cusumsq_upper: np.ndarray
    cusum_stable: bool
    cusumsq_stable: bool

    def to_csv(self, path, which: str = "cusum") -> None:
        """Write `t,stat,lower,upper` rows for external plotting."""
        stat, lo, hi = {
            "cusum": (self.cusum, self.cusum_lower, self.cusum_upper),
            "cusumsq": (self.cusumsq, self.cusumsq_lower, self.cusumsq_upper),
        }[which]
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("t,stat,lower,upper\n")
            for t, (s, l, u) in enumerate(zip(stat, lo, hi), start=1):
                fh.write(f"{t},{float(s)!r},{float(l)!r},{float(u)!r}\n")


@dataclass(frozen=True)
class DiagnosticsReport:
    lm: TestOutcome
    white: TestOutcome
    ramsey: TestOutcome
    jb: TestOutcome
    arch: TestOutcome
    stability: StabilityPaths

    @property
    def outcomes(self) -> tuple[TestOutcome, ...]:
        return (self.lm, self.white, self.ramsey, self.jb, self.arch)


def _block_f(rss_restricted: float, aux: RegressionFit, q: int,
             name: str, form: str) -> TestOutcome:
    """F (or chi-square LM) statistic for the q-column block added in `aux`."""
    if form == "f":
        stat = ((rss_restricted - aux.rss) / q) / (aux.rss / aux.df_resid)
        stat = max(stat, 0.0)
        p = float(stats.f.sf(stat, q, aux.df_resid))
    elif form == "chi2":
        r2 = 1.0 - aux.rss / rss_restricted if rss_restricted > 0 else 0.0
        stat = max(aux.nobs * r2, 0.0)
        p = float(stats.chi2.sf(stat, q))
    else:
        raise ValueError(f"form must be 'f' or 'chi2', got {form!r}")
    return TestOutcome(name, float(stat), p)


def breusch_godfrey(fit: RegressionFit, X: np.ndarray, lags: int = 2,
                    form: str = "f") -> TestOutcome:
    """Serial correlation LM test: residuals on X plus `lags` lagged
    residuals (zero-padded at the start)."""
    if lags < 1:
        raise InvalidLagCount("breusch_godfrey needs at least one lag")
    e = fit.resid
    n, k = X.shape
    if n <= k + lags:
        raise SeriesTooShort(f"{n} observations too few for BG({lags}) on k={k}")
    lagged = np.zeros((n, lags))
    for j in range(1, lags + 1):
        lagged[j:, j - 1] = e[:-j]
    aux = ols_fit(np.column_stack([X, lagged]), e)
    # e is orthogonal to X, so the restricted RSS is just e'e
    return _block_f(fit.rss, aux, lags, "LM", form)


def white_test(fit: RegressionFit, X: np.ndarray, form: str = "f") -> TestOutcome:
    """Heteroscedasticity test: squared residuals on the regressors and
    their squares, no cross terms."""
    n, k = X.shape
    nonconst = [j for j in range(k) if np.ptp(X[:, j]) > 0]
    if not nonconst:
        raise NoRegressorsToTest("constant-only model has nothing to test")
    terms = [X[:, j] for j in nonconst] + [X[:, j] ** 2 for j in nonconst]
    e2 = fit.resid**2
    aux_X = np.column_stack([np.ones(n), *terms])
    aux = ols_fit(aux_X, e2)
    e2c = e2 - e2.mean()
    return _block_f(float(e2c @ e2c), aux, len(terms), "White", form)


def ramsey_reset(fit: RegressionFit, X: np.ndarray, y: np.ndarray,
                 powers: tuple[int, ...] = (2,), form: str = "f") -> TestOutcome:
    """Functional-form test: F on fitted-value powers added to the design."""
    if not powers:
        raise InvalidLagCount("ramsey_reset needs at least one fitted-value power")
    n, k = X.shape
    if n <= k + len(powers):
        raise SeriesTooShort(f"{n} observations too few for RESET with {len(powers)} powers")
    yhat = X @ fit.params
    scale = float(np.abs(yhat).max()) or 1.0
    aug = np.column_stack([X] + [(yhat / scale) ** p for p in powers])
    full = ols_fit(aug, y)
    return _block_f(fit.rss, full, len(powers), "Ramsey", form)


def jarque_bera(resid: np.ndarray) -> TestOutcome:
    """JB = n (S^2/6 + (K-3)^2/24) against chi-square(2)."""
    e = np.asarray(resid, dtype=float)
    n = e.size
    if n < 4:
        raise SeriesTooShort(f"Jarque-Bera needs at least 4 observations, got {n}")
    c = e - e.mean()
    m2 = float(c @ c) / n
    if m2 == 0.0:
        return TestOutcome("JB", 0.0, 1.0)
    m3 = float(np.sum(c**3)) / n
    m4 = float(np.sum(c**4)) / n
    skew = m3 / m2**1.5
    kurt = m4 / m2**2
    stat = n * (skew**2 / 6.0 + (kurt - 3.0) ** 2 / 24.0)
    return TestOutcome("JB", stat, float(stats.chi2.sf(stat, 2)))


def arch_lm(resid: np.ndarray, order: int = 1, form: str = "f") -> TestOutcome:
    """ARCH LM test: squared residuals on their own `order` lags."""
    if order < 1:
        raise InvalidLagCount("arch_lm needs a positive order")
    e2 = np.asarray(resid, dtype=float) ** 2
    n = e2.size
    if n <= order + 2:
        raise SeriesTooShort(f"{n} residuals too few for ARCH({order})")
    ne = n - order
    X = np.column_stack([np.ones(ne)] + [e2[order - j:n - j] for j in range(1, order + 1)])
    aux = ols_fit(X, e2[order:])
    dep = e2[order:] - e2[order:].mean()
    return _block_f(float(dep @ dep), aux, order, "ARCH", form)


def _durbin_c0(m: float) -> float:
    """5% CUSUMSQ offset, linearly interpolated in m; 1/sqrt(m) tail beyond
    the table."""
    table = _DURBIN_C0_5PCT
    if m <= 1:
        return table[0]
    if m >= len(table):
        return table[-1] * math.sqrt(len(table) / m)
    lo = int(math.floor(m))
    frac = m - lo
    return (1.0 - frac) * table[lo - 1] + frac * table[lo]


def cusum_paths(X: np.ndarray, y: np.ndarray, level: float = 0.05) -> StabilityPaths:
    """CUSUM and CUSUMSQ of recursive residuals with significance bands.

    CUSUM_t is the scaled running sum of recursive residuals with the
    straight-line band at `level`; CUSUMSQ_t is the running share of the
    squared sum (nondecreasing, ending at exactly 1) with the parallel
    Durbin band, tabulated at the 5% level.
    """
    if level not in _CUSUM_A:
        raise ValueError(f"level must be one of {sorted(_CUSUM_A)}")
    n, k = X.shape
    w = recursive_residuals(X, y)
    m = n - k

    sd = float(np.std(w, ddof=1)) if m > 1 else 0.0
    cusum = np.cumsum(w) / sd if sd > 0 else np.zeros(m)
    t_idx = np.arange(1, m + 1, dtype=float)
    a = _CUSUM_A[level]
    upper = a * (math.sqrt(m) + 2.0 * t_idx / math.sqrt(m))
    lower = -upper

    cs = np.cumsum(w**2)
    if cs[-1] > 0:
        cusumsq = cs / cs[-1]  # final point is exactly 1 by construction
    else:
        cusumsq = t_idx / m
    c0 = _durbin_c0(m / 2.0 - 1.0)
    sq_mid = t_idx / m
    sq_upper = np.minimum(sq_mid + c0, 1.0)
    sq_lower = np.maximum(sq_mid - c0, 0.0)

    return StabilityPaths(
        cusum=cusum,
        cusum_lower=lower,
        cusum_upper=upper,
        cusumsq=cusumsq,
        cusumsq_lower=sq_lower,
        cusumsq_upper=sq_upper,
        cusum_stable=bool(np.all((cusum >= lower) & (cusum <= upper))),
        cusumsq_stable=bool(np.all((cusumsq >= sq_lower) & (cusumsq <= sq_upper))),
    )


def full_report(fit: RegressionFit, X: np.ndarray, y: np.ndarray,
                lm_lags: int = 2, arch_order: int = 1,
                reset_powers: tuple[int, ...] = (2,),
                level: float = 0.05) -> DiagnosticsReport:
    """Run the whole battery on one fitted regression."""
    return DiagnosticsReport(
        lm=breusch_godfrey(fit, X, lags=lm_lags),
        white=white_test(fit, X),
        ramsey=ramsey_reset(fit, X, y, powers=reset_powers),
        jb=jarque_bera(fit.resid),
        arch=arch_lm(fit.resid, order=arch_order),
        stability=cusum_paths(X, y, level=level),
    )
