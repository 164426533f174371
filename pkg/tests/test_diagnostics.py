import math

import numpy as np
import pytest

from bootardl.diagnostics import (
    arch_lm,
    breusch_godfrey,
    cusum_paths,
    full_report,
    jarque_bera,
    ramsey_reset,
    white_test,
)
from bootardl.errors import InvalidLagCount, NoRegressorsToTest, SeriesTooShort
from bootardl.regress import ols_fit


def design_and_noise(rng, n=100):
    X = np.column_stack([np.ones(n), rng.normal(size=n)])
    return X


def size_experiment(make_pvalue, n_seeds=200, level=0.05):
    rejections = sum(make_pvalue(np.random.default_rng(7000 + s)) < level
                     for s in range(n_seeds))
    return rejections / n_seeds


class TestBreuschGodfrey:
    def test_size_on_iid_noise(self):
        def p(rng):
            X = design_and_noise(rng)
            y = X @ [1.0, 2.0] + rng.normal(size=100)
            fit = ols_fit(X, y)
            return breusch_godfrey(fit, X, lags=2).pvalue
        assert 0.02 <= size_experiment(p) <= 0.09

    def test_detects_strong_ar1(self):
        rng = np.random.default_rng(42)
        X = design_and_noise(rng, 200)
        e = np.empty(200)
        e[0] = rng.normal()
        for t in range(1, 200):
            e[t] = 0.9 * e[t - 1] + rng.normal()
        y = X @ [1.0, 2.0] + e
        fit = ols_fit(X, y)
        assert breusch_godfrey(fit, X, lags=2).pvalue < 0.01

    def test_zero_lags_rejected(self):
        rng = np.random.default_rng(1)
        X = design_and_noise(rng)
        fit = ols_fit(X, rng.normal(size=100))
        with pytest.raises(InvalidLagCount):
            breusch_godfrey(fit, X, lags=0)


class TestWhite:
    def test_size_on_homoskedastic_noise(self):
        def p(rng):
            X = design_and_noise(rng)
            y = X @ [1.0, 2.0] + rng.normal(size=100)
            return white_test(ols_fit(X, y), X).pvalue
        assert 0.02 <= size_experiment(p) <= 0.09

    def test_detects_variance_proportional_to_x_squared(self):
        rng = np.random.default_rng(43)
        X = design_and_noise(rng, 200)
        y = X @ [1.0, 2.0] + np.abs(X[:, 1]) * rng.normal(size=200)
        assert white_test(ols_fit(X, y), X).pvalue < 0.01

    def test_constant_only_model(self):
        rng = np.random.default_rng(2)
        X = np.ones((50, 1))
        fit = ols_fit(X, rng.normal(size=50))
        with pytest.raises(NoRegressorsToTest):
            white_test(fit, X)


class TestRamseyReset:
    def test_size_on_linear_dgp(self):
        def p(rng):
            X = design_and_noise(rng)
            y = X @ [1.0, 2.0] + rng.normal(size=100)
            return ramsey_reset(ols_fit(X, y), X, y).pvalue
        assert 0.02 <= size_experiment(p) <= 0.09

    def test_detects_quadratic_dgp(self):
        rng = np.random.default_rng(44)
        X = design_and_noise(rng, 200)
        y = 1.0 + 2.0 * X[:, 1] + 1.5 * X[:, 1] ** 2 + rng.normal(size=200)
        assert ramsey_reset(ols_fit(X, y), X, y).pvalue < 0.01

    def test_empty_powers_rejected(self):
        rng = np.random.default_rng(3)
        X = design_and_noise(rng)
        y = rng.normal(size=100)
        with pytest.raises(InvalidLagCount):
            ramsey_reset(ols_fit(X, y), X, y, powers=())


class TestJarqueBera:
    def test_constructed_zero_statistic(self):
        # symmetric sample with kurtosis exactly 3: c^4 - 18c^2 - 15 = 0
        c = math.sqrt(9.0 + 4.0 * math.sqrt(6.0))
        data = np.array([-c, -1.0, -1.0, -1.0, 1.0, 1.0, 1.0, c])
        out = jarque_bera(data)
        assert out.statistic == pytest.approx(0.0, abs=1e-12)
        assert out.pvalue == pytest.approx(1.0, abs=1e-12)

    def test_hand_computed_moments(self):
        # [-2,-1,0,1,2]: m2=2, m4=6.8, S=0, K=1.7
        # JB = 5 * (1.3^2 / 24) = 0.3520833..., p = exp(-JB/2)
        out = jarque_bera(np.array([-2.0, -1.0, 0.0, 1.0, 2.0]))
        assert out.statistic == pytest.approx(8.45 / 24.0, abs=1e-12)
        assert out.pvalue == pytest.approx(math.exp(-8.45 / 48.0), abs=1e-12)

    def test_gaussian_rarely_rejects(self):
        hits = sum(jarque_bera(np.random.default_rng(500 + s).normal(size=500)).pvalue > 0.01
                   for s in range(200))
        assert hits >= 190

    def test_too_short(self):
        with pytest.raises(SeriesTooShort):
            jarque_bera(np.arange(3.0))


class TestArchLm:
    def test_size_on_iid_residuals(self):
        def p(rng):
            return arch_lm(rng.normal(size=100), order=1).pvalue
        assert 0.02 <= size_experiment(p) <= 0.09

    def test_detects_arch1(self):
        rng = np.random.default_rng(45)
        n = 400
        e = np.empty(n)
        sigma2 = 1.0
        e[0] = rng.normal()
        for t in range(1, n):
            sigma2 = 0.3 + 0.7 * e[t - 1] ** 2
            e[t] = math.sqrt(sigma2) * rng.normal()
        assert arch_lm(e, order=1).pvalue < 0.01

    def test_order_zero_rejected(self):
        with pytest.raises(InvalidLagCount):
            arch_lm(np.arange(20.0), order=0)


class TestCusumPaths:
    def _stable_xy(self, rng, n=120):
        X = np.column_stack([np.ones(n), rng.normal(size=n)])
        y = X @ [1.0, 2.0] + rng.normal(size=n)
        return X, y

    def test_stable_dgp_rarely_flags(self):
        # each 5%-sized path test flags a stable DGP in about 5% of seeds
        stable_c = stable_s = 0
        for s in range(200):
            rng = np.random.default_rng(9000 + s)
            X, y = self._stable_xy(rng)
            paths = cusum_paths(X, y)
            stable_c += paths.cusum_stable
            stable_s += paths.cusumsq_stable
        assert stable_c >= 190
        assert stable_s >= 190

    def test_break_detected(self):
        detected = 0
        for s in range(100):
            rng = np.random.default_rng(9500 + s)
            n = 120
            X = np.column_stack([np.ones(n), rng.normal(size=n)])
            beta = np.where(np.arange(n)[:, None] < 60, [1.0, 2.0], [5.0, -2.0])
            y = (X * beta).sum(axis=1) + rng.normal(size=n)
            paths = cusum_paths(X, y)
            detected += not (paths.cusum_stable and paths.cusumsq_stable)
        assert detected >= 80

    def test_cusumsq_ends_at_exactly_one(self):
        rng = np.random.default_rng(46)
        X, y = self._stable_xy(rng)
        paths = cusum_paths(X, y)
        assert paths.cusumsq[-1] == 1.0
        assert np.all(np.diff(paths.cusumsq) >= 0.0)

    def test_bounds_same_length_as_paths(self):
        rng = np.random.default_rng(47)
        X, y = self._stable_xy(rng, 40)
        paths = cusum_paths(X, y)
        m = 40 - 2
        for arr in (paths.cusum, paths.cusum_lower, paths.cusum_upper,
                    paths.cusumsq, paths.cusumsq_lower, paths.cusumsq_upper):
            assert arr.shape == (m,)

    def test_csv_export(self, tmp_path):
        rng = np.random.default_rng(48)
        X, y = self._stable_xy(rng, 30)
        paths = cusum_paths(X, y)
        f = tmp_path / "cusum.csv"
        paths.to_csv(f, "cusumsq")
        lines = f.read_text().splitlines()
        assert lines[0] == "t,stat,lower,upper"
        assert len(lines) == 1 + 28


class TestFullReport:
    def test_scale_invariance_of_statistics(self):
        rng = np.random.default_rng(49)
        n = 80
        X = np.column_stack([np.ones(n), rng.normal(size=n)])
        y = X @ [1.0, 2.0] + rng.normal(size=n)
        r1 = full_report(ols_fit(X, y), X, y)
        c = 250.0
        r2 = full_report(ols_fit(X, c * y), X, c * y)
        for o1, o2 in zip(r1.outcomes, r2.outcomes):
            assert o1.statistic == pytest.approx(o2.statistic, rel=1e-8, abs=1e-10)
            assert o1.pvalue == pytest.approx(o2.pvalue, rel=1e-8, abs=1e-10)

    def test_pvalues_in_unit_interval(self):
        rng = np.random.default_rng(50)
        n = 60
        X = np.column_stack([np.ones(n), rng.normal(size=n)])
        y = X @ [0.5, 1.0] + rng.normal(size=n)
        rep = full_report(ols_fit(X, y), X, y)
        for o in rep.outcomes:
            assert 0.0 <= o.pvalue <= 1.0

    def test_statistic_pvalue_monotone_within_family(self):
        # larger statistic implies smaller p within the same test family / df
        from scipy import stats as sps
        assert sps.f.sf(4.0, 2, 50) < sps.f.sf(1.0, 2, 50)
        assert sps.chi2.sf(9.0, 2) < sps.chi2.sf(1.0, 2)
        rng = np.random.default_rng(51)
        n = 90
        X = np.column_stack([np.ones(n), rng.normal(size=n)])
        weak = X @ [1.0, 2.0] + rng.normal(size=n)
        e = np.empty(n)
        e[0] = rng.normal()
        for t in range(1, n):
            e[t] = 0.8 * e[t - 1] + rng.normal()
        strong = X @ [1.0, 2.0] + e
        bg_weak = breusch_godfrey(ols_fit(X, weak), X)
        bg_strong = breusch_godfrey(ols_fit(X, strong), X)
        assert bg_strong.statistic > bg_weak.statistic
        assert bg_strong.pvalue < bg_weak.pvalue

    def test_chi2_form_available(self):
        rng = np.random.default_rng(52)
        n = 70
        X = np.column_stack([np.ones(n), rng.normal(size=n)])
        y = X @ [1.0, 2.0] + rng.normal(size=n)
        fit = ols_fit(X, y)
        f_form = breusch_godfrey(fit, X, form="f")
        chi_form = breusch_godfrey(fit, X, form="chi2")
        assert f_form.statistic != chi_form.statistic
        assert 0.0 <= chi_form.pvalue <= 1.0
