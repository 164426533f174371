"""Bivariate ARDL specification, lag selection, and UECM estimation.

The unrestricted error correction form regresses the differenced dependent
variable on a constant, its own lagged differences, current and lagged
differences of the regressor, and both variables' lagged levels. The two
level coefficients carry the long-run information: their ratio gives the
equilibrium coefficient and the dependent one is the error-correction term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import stats

from bootardl.errors import DegenerateLongRun, RankDeficient, SeriesTooShort
from bootardl.regress import RegressionFit, ols_fit
from bootardl.series import Column, LaggedDesign, RealizedDesign, TimeSeries

DEFAULT_MAX_P = 4
DEFAULT_MAX_Q = 4


@dataclass(frozen=True)
class ArdlSpec:
    """Lag structure (p, q) of a bivariate ARDL: p >= 1 dependent lags,
    q >= 0 difference terms of the independent variable in the UECM."""

    dependent: str
    independent: str
    p: int
    q: int
    constant: bool = True

    def __post_init__(self) -> None:
        if self.p < 1:
            raise ValueError("p must be >= 1")
        if self.q < 0:
            raise ValueError("q must be >= 0")

    @property
    def label(self) -> str:
        return f"{self.p},{self.q}"


def uecm_design(spec: ArdlSpec) -> LaggedDesign:
    """Design recipe: d(y)_t on const, d(y) lags 1..p-1, d(x) lags 0..q-1,
    y[t-1], x[t-1]. The two level columns come last."""
    y, x = spec.dependent, spec.independent
    cols: list[Column] = []
    cols.extend(Column(y, i, diff=True) for i in range(1, spec.p))
    cols.extend(Column(x, j, diff=True) for j in range(0, spec.q))
    cols.append(Column(y, 1, diff=False))
    cols.append(Column(x, 1, diff=False))
    return LaggedDesign(Column(y, 0, diff=True), tuple(cols), constant=spec.constant)


@dataclass(frozen=True)
class UECMFit:
    """Estimated UECM with the coefficient bookkeeping of the ARDL spec.

    The constant (if present), short-run difference blocks and the two level
    coefficients jointly exhaust the underlying coefficient vector.
    """

    spec: ArdlSpec
    fit: RegressionFit
    design: RealizedDesign

    @property
    def _offset(self) -> int:
        return 1 if self.spec.constant else 0

    @property
    def mu1_index(self) -> int:
        """Column of the lagged dependent level."""
        return self.fit.nparams - 2

    @property
    def mu2_index(self) -> int:
        """Column of the lagged independent level."""
        return self.fit.nparams - 1

    @property
    def mu1(self) -> float:
        return float(self.fit.params[self.mu1_index])

    @property
    def mu2(self) -> float:
        return float(self.fit.params[self.mu2_index])

    @property
    def const(self) -> float | None:
        return float(self.fit.params[0]) if self.spec.constant else None

    @property
    def dy_indices(self) -> tuple[int, ...]:
        off = self._offset
        return tuple(range(off, off + self.spec.p - 1))

    @property
    def dx_indices(self) -> tuple[int, ...]:
        off = self._offset + self.spec.p - 1
        return tuple(range(off, off + self.spec.q))


def fit_uecm(y: TimeSeries, x: TimeSeries, spec: ArdlSpec) -> UECMFit:
    """Estimate the UECM for `spec` on the maximal common sample."""
    design = uecm_design(spec).realize({y.name: y, x.name: x})
    fit = ols_fit(design.X, design.y, names=design.names)
    return UECMFit(spec, fit, design)


def fit_uecm_arrays(yv: np.ndarray, xv: np.ndarray, spec: ArdlSpec) -> tuple[RegressionFit, np.ndarray, np.ndarray]:
    """UECM estimation straight from raw value arrays (bootstrap hot path).

    Returns the fit together with the realized X and dy so callers can reuse
    them. Index layout matches `fit_uecm`.
    """
    X, dy = build_uecm_matrix(yv, xv, spec)
    return ols_fit(X, dy), X, dy


def build_uecm_matrix(yv: np.ndarray, xv: np.ndarray, spec: ArdlSpec) -> tuple[np.ndarray, np.ndarray]:
    """Assemble the UECM design matrix from aligned value arrays."""
    T = yv.size
    pre = max(spec.p, spec.q, 1)
    n = T - pre
    if n <= spec.p + spec.q + 2:
        raise SeriesTooShort(
            f"{T} observations leave {n} after presample {pre}; too few for "
            f"ARDL({spec.p},{spec.q})"
        )
    dyv = np.diff(yv)
    dxv = np.diff(xv)
    # differenced series index i corresponds to level index i+1
    rows: list[np.ndarray] = []
    if spec.constant:
        rows.append(np.ones(n))
    for i in range(1, spec.p):
        rows.append(dyv[pre - 1 - i:T - 1 - i])
    for j in range(0, spec.q):
        rows.append(dxv[pre - 1 - j:T - 1 - j])
    rows.append(yv[pre - 1:T - 1])
    rows.append(xv[pre - 1:T - 1])
    X = np.column_stack(rows)
    return X, dyv[pre - 1:]


def select_lags(
    y: TimeSeries,
    x: TimeSeries,
    p_max: int = DEFAULT_MAX_P,
    q_max: int = DEFAULT_MAX_Q,
) -> ArdlSpec:
    """Grid-search (p, q) minimizing the Schwarz criterion.

    Every candidate is estimated on the common sample trimmed to the largest
    presample in the grid so the criterion values are comparable. Ties go to
    the smaller total lag order (then smaller p).
    """
    from bootardl.series import align

    ya, xa = align([y, x])
    max_pre = max(p_max, q_max, 1)
    common_n = len(ya) - max_pre
    if common_n <= p_max + q_max + 5:
        raise SeriesTooShort(
            f"common sample of {len(ya)} observations too short for a "
            f"(p_max={p_max}, q_max={q_max}) grid"
        )

    candidates = sorted(
        ((p, q) for p in range(1, p_max + 1) for q in range(0, q_max + 1)),
        key=lambda pq: (pq[0] + pq[1], pq[0], pq[1]),
    )
    best: tuple[float, ArdlSpec] | None = None
    last_error: RankDeficient | None = None
    for p, q in candidates:
        spec = ArdlSpec(y.name, x.name, p, q)
        X, dy = build_uecm_matrix(ya.values, xa.values, spec)
        trim = max_pre - max(p, q, 1)
        try:
            fit = ols_fit(X[trim:], dy[trim:])
        except RankDeficient as exc:
            # a degenerate candidate (e.g. duplicate-information lags) does
            # not invalidate the rest of the grid
            last_error = exc
            continue
        sbc = fit.sbc()
        if best is None or sbc < best[0] - 1e-12:
            best = (sbc, spec)
    if best is None:
        raise last_error if last_error is not None else RankDeficient(
            "no estimable lag candidate"
        )
    return best[1]


@dataclass(frozen=True)
class Coefficient:
    name: str
    value: float
    se: float
    tval: float
    pval: float

    def significant(self, level: float = 0.05) -> bool:
        return self.pval < level


@dataclass(frozen=True)
class EcmEstimates:
    """Long- and short-run estimates derived from a UECM fit.

    theta is -mu2/mu1 with a delta-method standard error; ect is the lagged
    dependent level coefficient, whose negativity measures the speed of
    adjustment back to equilibrium.
    """

    theta: Coefficient
    ect: Coefficient
    shortrun: tuple[Coefficient, ...]
    const: Coefficient | None


def _coef(fit: RegressionFit, i: int, name: str) -> Coefficient:
    val = float(fit.params[i])
    se = float(fit.bse[i])
    t = val / se
    p = 2.0 * float(stats.t.sf(abs(t), fit.df_resid))
    return Coefficient(name, val, se, t, p)


def ecm_estimates(uecm: UECMFit) -> EcmEstimates:
    """Report theta = -mu2/mu1, the ECT coefficient, and the short-run block.

    Raises
    ------
    DegenerateLongRun
        When |mu1| < 1e-8 and the ratio is undefined.
    """
    fit = uecm.fit
    mu1, mu2 = uecm.mu1, uecm.mu2
    if abs(mu1) < 1e-8:
        raise DegenerateLongRun(
            f"lagged dependent level coefficient {mu1!r} is numerically zero"
        )
    theta = -mu2 / mu1
    i1, i2 = uecm.mu1_index, uecm.mu2_index
    # delta method: d theta / d(mu1, mu2) = (mu2/mu1^2, -1/mu1)
    d = np.array([mu2 / mu1**2, -1.0 / mu1])
    block = fit.cov_params[np.ix_([i1, i2], [i1, i2])]
    var_theta = float(d @ block @ d)
    se_theta = math.sqrt(max(var_theta, 0.0))
    t_theta = theta / se_theta if se_theta > 0 else math.inf
    p_theta = 2.0 * float(stats.t.sf(abs(t_theta), fit.df_resid))

    x = uecm.spec.independent
    names = list(fit.names)
    shortrun = tuple(
        _coef(fit, i, names[i]) for i in (*uecm.dy_indices, *uecm.dx_indices)
    )
    const = _coef(fit, 0, "const") if uecm.spec.constant else None
    return EcmEstimates(
        theta=Coefficient(x, theta, se_theta, t_theta, p_theta),
        ect=_coef(fit, uecm.mu1_index, "ECT[t-1]"),
        shortrun=shortrun,
        const=const,
    )
