"""Ordinary least squares engine and the inference machinery built on it.

Everything estimated in this package reduces to the routines here: QR-based
OLS with coefficient covariance, Wald F-tests on linear restrictions,
recursive residuals for stability analysis, and the Bartlett-kernel long-run
variance. All functions are pure and safe to call concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import linalg as sla

from bootardl.errors import (
    BandwidthTooLarge,
    RankDeficient,
    SingularRestrictionCovariance,
    TooFewObservations,
)

# Relative rank tolerance for the pivoted-QR factor; lagged regressors are
# routinely near-collinear at T around 80.
RANK_RTOL = 1e-10


@dataclass(frozen=True)
class RegressionFit:
    """Result of one OLS estimation.

    Attributes
    ----------
    params : ndarray, shape (k,)
        Least-squares coefficients.
    bse : ndarray, shape (k,)
        Standard errors, from sigma2 * (X'X)^{-1}.
    resid : ndarray, shape (n,)
        Residuals y - X @ params.
    rss : float
        Residual sum of squares.
    sigma2 : float
        rss / (n - k); the single degrees-of-freedom convention used
        throughout the package.
    nobs, nparams : int
        Sample size and number of regressors.
    loglik : float
        Gaussian log-likelihood at the ML variance rss/n, stored so
        information criteria need no refit.
    cov_params : ndarray, shape (k, k)
        Coefficient covariance, symmetric PSD.
    names : tuple of str
        Column labels, parallel to params.
    """

    params: np.ndarray
    bse: np.ndarray
    resid: np.ndarray
    rss: float
    sigma2: float
    nobs: int
    nparams: int
    loglik: float
    cov_params: np.ndarray
    names: tuple[str, ...] = ()

    @property
    def df_resid(self) -> int:
        return self.nobs - self.nparams

    @property
    def tvalues(self) -> np.ndarray:
        return self.params / self.bse

    def sbc(self) -> float:
        """Schwarz-Bayesian criterion, -2 logL + k ln(n)."""
        return -2.0 * self.loglik + self.nparams * math.log(self.nobs)

    def fitted(self, X: np.ndarray) -> np.ndarray:
        return X @ self.params


@dataclass(frozen=True)
class LinearRestriction:
    """q linear restrictions R beta = r on a k-coefficient fit."""

    R: np.ndarray
    r: np.ndarray

    def __post_init__(self) -> None:
        R = np.atleast_2d(np.asarray(self.R, dtype=float))
        r = np.atleast_1d(np.asarray(self.r, dtype=float))
        if R.shape[0] != r.size:
            raise ValueError("restriction matrix and target length disagree")
        if R.shape[0] > R.shape[1]:
            raise ValueError("more restrictions than coefficients")
        if np.linalg.matrix_rank(R) < R.shape[0]:
            raise ValueError("restriction matrix does not have full row rank")
        object.__setattr__(self, "R", R)
        object.__setattr__(self, "r", r)

    @classmethod
    def zeros(cls, indices: list[int] | tuple[int, ...], k: int) -> "LinearRestriction":
        """Joint null that the coefficients at `indices` are all zero."""
        R = np.zeros((len(indices), k))
        for row, idx in enumerate(indices):
            R[row, idx] = 1.0
        return cls(R, np.zeros(len(indices)))


def ols_fit(X: np.ndarray, y: np.ndarray, names: tuple[str, ...] = ()) -> RegressionFit:
    """Least squares through a pivoted QR decomposition.

    The coefficient covariance sigma2 * (X'X)^{-1} is obtained from the
    triangular factor, never from an explicit normal-equations inverse.

    Raises
    ------
    TooFewObservations
        If n <= k.
    RankDeficient
        If the smallest pivoted |R_ii| falls below RANK_RTOL times the
        largest; the message carries the condition diagnostic.
    """
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    n, k = X.shape
    if n <= k:
        raise TooFewObservations(f"{n} observations for {k} regressors")

    Q, R, piv = sla.qr(X, mode="economic", pivoting=True)
    diag = np.abs(np.diag(R))
    if diag[0] == 0.0 or diag[-1] < RANK_RTOL * diag[0]:
        cond = math.inf if diag[-1] == 0.0 else diag[0] / diag[-1]
        raise RankDeficient(
            f"design matrix numerically rank deficient "
            f"(|R_11|/|R_kk| = {cond:.3e}, tolerance {1.0 / RANK_RTOL:.1e})"
        )

    beta_piv = sla.solve_triangular(R, Q.T @ y)
    params = np.empty(k)
    params[piv] = beta_piv

    resid = y - X @ params
    rss = float(resid @ resid)
    sigma2 = rss / (n - k)

    # (X'X)^{-1} = P R^{-1} R^{-T} P' with P the pivot permutation
    Rinv = sla.solve_triangular(R, np.eye(k))
    xtx_inv_piv = Rinv @ Rinv.T
    xtx_inv = np.empty((k, k))
    xtx_inv[np.ix_(piv, piv)] = xtx_inv_piv
    cov = sigma2 * xtx_inv
    cov = 0.5 * (cov + cov.T)

    if rss > 0.0:
        loglik = -0.5 * n * (math.log(2.0 * math.pi) + math.log(rss / n) + 1.0)
    else:
        loglik = math.inf  # exact fit: degenerate Gaussian likelihood
    return RegressionFit(
        params=params,
        bse=np.sqrt(np.diag(cov)),
        resid=resid,
        rss=rss,
        sigma2=sigma2,
        nobs=n,
        nparams=k,
        loglik=loglik,
        cov_params=cov,
        names=tuple(names),
    )


def wald_f(fit: RegressionFit, restr: LinearRestriction) -> float:
    """Wald F statistic (Rb - r)' [R V R']^{-1} (Rb - r) / q."""
    R, r = restr.R, restr.r
    if R.shape[1] != fit.nparams:
        raise ValueError(
            f"restriction has {R.shape[1]} columns, fit has {fit.nparams} coefficients"
        )
    q = R.shape[0]
    dev = R @ fit.params - r
    mid = R @ fit.cov_params @ R.T
    try:
        c, low = sla.cho_factor(mid)
        solved = sla.cho_solve((c, low), dev)
    except np.linalg.LinAlgError as exc:
        raise SingularRestrictionCovariance(str(exc)) from exc
    stat = float(dev @ solved) / q
    return max(stat, 0.0)


def t_statistic(fit: RegressionFit, index: int) -> float:
    """Coefficient divided by its standard error."""
    return float(fit.params[index] / fit.bse[index])


def recursive_residuals(X: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Standardized one-step-ahead prediction errors (Brown-Durbin-Evans).

    w_t = (y_t - x_t' b_{t-1}) / sqrt(1 + x_t' (X_{t-1}'X_{t-1})^{-1} x_t)
    for t = k+1..n, with b_{t-1} the OLS fit on the first t-1 rows, updated
    by the rank-one recursion rather than refit each step.

    Raises
    ------
    RankDeficient
        If the initial k-row window is singular.
    TooFewObservations
        If n <= k + 1.
    """
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    n, k = X.shape
    if n < k + 1:
        raise TooFewObservations(f"need at least k+1={k + 1} observations, got {n}")

    X0 = X[:k]
    R0 = sla.qr(X0, mode="r")[0]
    d0 = np.abs(np.diag(R0))
    if d0.min() < RANK_RTOL * max(d0.max(), 1.0):
        raise RankDeficient(f"initial {k}-observation window singular")
    R0_inv = sla.solve_triangular(R0, np.eye(k))
    xtx_inv = R0_inv @ R0_inv.T
    beta = xtx_inv @ X0.T @ y[:k]

    w = np.empty(n - k)
    for t in range(k, n):
        x_t = X[t]
        err = y[t] - x_t @ beta
        f_t = 1.0 + x_t @ xtx_inv @ x_t
        if f_t <= 0.0 or not np.isfinite(f_t):
            raise RankDeficient(f"expanding window singular at step {t}")
        w[t - k] = err / math.sqrt(f_t)
        g = xtx_inv @ x_t
        xtx_inv = xtx_inv - np.outer(g, g) / f_t
        beta = beta + g * (err / f_t)
    return w


def newey_west_lrv(x: np.ndarray, bandwidth: int) -> float:
    """Bartlett-kernel long-run variance.

    gamma_0 + 2 * sum_{j=1..bandwidth} (1 - j/(bandwidth+1)) gamma_j, with
    gamma_j the demeaned sample autocovariances divided by n. Nonnegative by
    construction of the kernel. Bandwidth 0 returns the (1/n) sample variance.
    """
    x = np.asarray(x, dtype=float)
    n = x.size
    if bandwidth < 0:
        raise ValueError("bandwidth must be nonnegative")
    if bandwidth >= n:
        raise BandwidthTooLarge(f"bandwidth {bandwidth} >= sample length {n}")
    e = x - x.mean()
    lrv = float(e @ e) / n
    for j in range(1, bandwidth + 1):
        gamma_j = float(e[j:] @ e[:-j]) / n
        lrv += 2.0 * (1.0 - j / (bandwidth + 1.0)) * gamma_j
    return max(lrv, 0.0)
