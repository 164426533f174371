import math

import numpy as np
import pytest

from bootardl.ardl import (
    ArdlSpec,
    build_uecm_matrix,
    ecm_estimates,
    fit_uecm,
    select_lags,
    uecm_design,
)
from bootardl.errors import DegenerateLongRun
from bootardl.regress import RegressionFit, ols_fit
from bootardl.series import Column, LaggedDesign, lag
from tests.conftest import ts


def cointegrated_pair(rng, n, theta=0.5, speed=0.5, sd=1.0):
    x = np.cumsum(rng.standard_normal(n))
    y = np.empty(n)
    y[0] = theta * x[0]
    for t in range(1, n):
        y[t] = y[t - 1] - speed * (y[t - 1] - theta * x[t - 1]) + sd * rng.standard_normal()
    return y, x


def sbc_oracle(X, dy):
    """SBC computed from scratch for a candidate design."""
    n, k = X.shape
    beta, _, _, _ = np.linalg.lstsq(X, dy, rcond=None)
    rss = float(np.sum((dy - X @ beta) ** 2))
    loglik = -0.5 * n * (math.log(2 * math.pi) + math.log(rss / n) + 1)
    return -2 * loglik + k * math.log(n)


class TestSpec:
    def test_validation(self):
        with pytest.raises(ValueError):
            ArdlSpec("y", "x", 0, 1)
        with pytest.raises(ValueError):
            ArdlSpec("y", "x", 1, -1)
        assert ArdlSpec("y", "x", 1, 2).label == "1,2"


class TestUecmDesign:
    def test_column_layout_1_2(self):
        # spec (1,2) must contain d(x)[t] and d(x)[t-1]
        design = uecm_design(ArdlSpec("y", "x", 1, 2))
        assert design.labels == ("const", "d(x)[t]", "d(x)[t-1]", "y[t-1]", "x[t-1]")

    def test_column_layout_3_1(self):
        design = uecm_design(ArdlSpec("y", "x", 3, 1))
        assert design.labels == (
            "const", "d(y)[t-1]", "d(y)[t-2]", "d(x)[t]", "y[t-1]", "x[t-1]",
        )

    def test_matrix_matches_lagged_design(self):
        rng = np.random.default_rng(12)
        y, x = cointegrated_pair(rng, 60)
        spec = ArdlSpec("y", "x", 2, 2)
        X, dy = build_uecm_matrix(y, x, spec)
        real = uecm_design(spec).realize({"y": ts(y, "y"), "x": ts(x, "x")})
        assert np.allclose(X, real.X, atol=0)
        assert np.allclose(dy, real.y, atol=0)


class TestFitUecm:
    def test_identity_pair_recovers_unit_coefficients(self):
        rng = np.random.default_rng(44)
        x = np.cumsum(rng.standard_normal(200))
        y = x + 1e-8 * rng.standard_normal(200)
        fit = fit_uecm(ts(y, "y"), ts(x, "x"), ArdlSpec("y", "x", 1, 1))
        assert fit.fit.rss < 200 * (1e-7) ** 2
        assert fit.mu1 == pytest.approx(-1.0, abs=0.3)
        assert fit.mu2 == pytest.approx(1.0, abs=0.3)

    def test_recovers_long_run_ratio(self):
        rng = np.random.default_rng(55)
        y, x = cointegrated_pair(rng, 500)
        fit = fit_uecm(ts(y, "y"), ts(x, "x"), ArdlSpec("y", "x", 1, 1))
        assert -fit.mu2 / fit.mu1 == pytest.approx(0.5, abs=0.1)

    def test_reparameterization_matches_levels_ardl(self):
        # the UECM is a linear re-coding of the levels regression:
        # identical fitted values and RSS
        rng = np.random.default_rng(66)
        y, x = cointegrated_pair(rng, 120)
        spec = ArdlSpec("y", "x", 2, 2)
        u = fit_uecm(ts(y, "y"), ts(x, "x"), spec)
        levels = LaggedDesign(
            Column("y", 0, False),
            (Column("y", 1, False), Column("y", 2, False),
             Column("x", 0, False), Column("x", 1, False), Column("x", 2, False)),
        ).realize({"y": ts(y, "y"), "x": ts(x, "x")})
        lv = ols_fit(levels.X, levels.y)
        assert lv.rss == pytest.approx(u.fit.rss, rel=1e-8)
        uecm_fitted = u.design.X @ u.fit.params + levels.X[:, 1]  # + y[t-1]
        levels_fitted = levels.X @ lv.params
        assert np.allclose(uecm_fitted, levels_fitted, atol=1e-8)

    def test_coefficient_bookkeeping_exhausts_vector(self):
        rng = np.random.default_rng(13)
        y, x = cointegrated_pair(rng, 100)
        u = fit_uecm(ts(y, "y"), ts(x, "x"), ArdlSpec("y", "x", 3, 2))
        indices = {0, *u.dy_indices, *u.dx_indices, u.mu1_index, u.mu2_index}
        assert indices == set(range(u.fit.nparams))


class TestSelectLags:
    def test_matches_two_candidate_brute_force(self):
        rng = np.random.default_rng(31)
        y, x = cointegrated_pair(rng, 150)
        ys, xs = ts(y, "y"), ts(x, "x")
        chosen = select_lags(ys, xs, 1, 1)
        # brute force: both candidates on the common sample (trim to presample 1)
        sbcs = {}
        for q in (0, 1):
            X, dy = build_uecm_matrix(y, x, ArdlSpec("y", "x", 1, q))
            sbcs[q] = sbc_oracle(X, dy)
        want_q = min(sbcs, key=sbcs.get)
        assert (chosen.p, chosen.q) == (1, want_q)

    def test_strong_signal_recovers_true_order(self):
        # ARDL(1,1) DGP with a strong contemporaneous term; expect (1,1)
        # selected in nearly all seeds
        hits = 0
        for seed in range(100):
            rng = np.random.default_rng(1000 + seed)
            x = np.cumsum(rng.standard_normal(400))
            y = np.empty(400)
            y[0] = 0.0
            for t in range(1, 400):
                y[t] = y[t - 1] - 0.5 * (y[t - 1] - 0.5 * x[t - 1]) \
                    + 1.5 * (x[t] - x[t - 1]) + 0.5 * rng.standard_normal()
            spec = select_lags(ts(y, "y"), ts(x, "x"), 3, 3)
            hits += (spec.p, spec.q) == (1, 1)
        assert hits >= 95, f"selected (1,1) in only {hits}/100 seeds"

    def test_exact_tie_goes_to_smaller_total_lag(self, monkeypatch):
        # force every candidate to the same criterion value: the smallest
        # total lag order (then smallest p) must win
        monkeypatch.setattr(RegressionFit, "sbc", lambda self: 42.0)
        rng = np.random.default_rng(91)
        y, x = cointegrated_pair(rng, 150)
        chosen = select_lags(ts(y, "y"), ts(x, "x"), 3, 3)
        assert (chosen.p, chosen.q) == (1, 0)

    def test_duplicate_information_candidates_are_skipped(self):
        # x_t = y_{t-1} + 3 makes every spec with p >= 2 or q >= 1 exactly
        # collinear; the grid search must skip them, not abort
        rng = np.random.default_rng(92)
        y = np.cumsum(rng.standard_normal(120))
        ys = ts(y, "y")
        xs = ts(lag(ys, 1).values + 3.0, "x")
        ya = ts(y[1:], "y")  # align spans: x starts one day later
        chosen = select_lags(ya, xs, 2, 1)
        assert (chosen.p, chosen.q) == (1, 0)

    def test_selected_sbc_is_grid_minimum(self):
        rng = np.random.default_rng(71)
        y, x = cointegrated_pair(rng, 200)
        chosen = select_lags(ts(y, "y"), ts(x, "x"), 3, 3)
        max_pre = 3
        sbcs = {}
        for p in range(1, 4):
            for q in range(0, 4):
                X, dy = build_uecm_matrix(y, x, ArdlSpec("y", "x", p, q))
                trim = max_pre - max(p, q, 1)
                sbcs[(p, q)] = sbc_oracle(X[trim:], dy[trim:])
        assert sbcs[(chosen.p, chosen.q)] == pytest.approx(min(sbcs.values()), rel=1e-10)


class TestEcmEstimates:
    def _uecm_with_levels(self, mu1, mu2):
        """Craft a UECMFit carrying the requested level coefficients."""
        from bootardl.ardl import UECMFit
        from bootardl.series import RealizedDesign
        import datetime as dt

        params = np.array([0.1, 0.2, mu1, mu2])
        k = params.size
        fit = RegressionFit(
            params=params,
            bse=np.full(k, 0.1),
            resid=np.zeros(10),
            rss=1.0,
            sigma2=1.0 / 6,
            nobs=10,
            nparams=k,
            loglik=0.0,
            cov_params=0.01 * np.eye(k),
            names=("const", "d(x)[t]", "y[t-1]", "x[t-1]"),
        )
        spec = ArdlSpec("y", "x", 1, 1)
        design = RealizedDesign(uecm_design(spec), np.zeros((10, k)), np.zeros(10),
                                dt.date(2020, 1, 1), fit.names)
        return UECMFit(spec, fit, design)

    def test_published_ratio_reproduced_exactly(self):
        u = self._uecm_with_levels(-0.865, 0.170405)
        est = ecm_estimates(u)
        assert est.theta.value == 0.197
        assert est.ect.value == -0.865

    def test_zero_mu2(self):
        est = ecm_estimates(self._uecm_with_levels(-1.0, 0.0))
        assert est.theta.value == 0.0

    def test_degenerate_mu1(self):
        with pytest.raises(DegenerateLongRun):
            ecm_estimates(self._uecm_with_levels(0.0, 0.5))

    def test_delta_method_se_positive_and_finite(self):
        rng = np.random.default_rng(88)
        y, x = cointegrated_pair(rng, 300)
        est = ecm_estimates(fit_uecm(ts(y, "y"), ts(x, "x"), ArdlSpec("y", "x", 1, 1)))
        assert est.theta.se > 0 and np.isfinite(est.theta.se)
        assert est.ect.value < 0

    def test_ect_negative_on_cointegrated_dgp(self):
        rng = np.random.default_rng(99)
        y, x = cointegrated_pair(rng, 400)
        est = ecm_estimates(fit_uecm(ts(y, "y"), ts(x, "x"), ArdlSpec("y", "x", 1, 1)))
        assert est.ect.value < 0
        assert -2.0 < est.ect.value < 0.0
