import datetime as dt
import json

import numpy as np
import pytest

from bootardl.errors import ConfigError, EstimationError
from bootardl.pipeline import (
    DGP_NAMES,
    RunConfig,
    draw_dgp,
    emit_report,
    load_config,
    parse_models,
    run_size_power,
    run_study,
)
from tests.conftest import DATA


def write_config(tmp_path, **extra):
    lines = [
        f"ecdc_csv = {DATA / 'ecdc_covid19_daily.csv'}",
        f"epu_us_csv = {DATA / 'epu_us_daily.csv'}",
        f"epu_uk_csv = {DATA / 'epu_uk_daily.csv'}",
        "seed = 42",
        "replications = 100",
    ]
    lines += [f"{k} = {v}" for k, v in extra.items()]
    path = tmp_path / "study.cfg"
    path.write_text("\n".join(lines) + "\n")
    return path


class TestConfig:
    def test_load_with_defaults(self, tmp_path):
        cfg = load_config(write_config(tmp_path))
        assert cfg.seed == 42
        assert cfg.window_start == dt.date(2020, 3, 7)
        assert cfg.level == 0.05
        assert len(cfg.models) == 8

    def test_flag_overrides_beat_file(self, tmp_path):
        cfg = load_config(write_config(tmp_path), {"seed": 7, "level": 0.10})
        assert cfg.seed == 7
        assert cfg.level == 0.10

    def test_unknown_key(self, tmp_path):
        path = tmp_path / "bad.cfg"
        path.write_text("nonsense = 1\nseed = 3\n")
        with pytest.raises(ConfigError):
            load_config(path)

    def test_missing_seed(self, tmp_path):
        path = tmp_path / "bad.cfg"
        path.write_text(f"ecdc_csv = {DATA / 'ecdc_covid19_daily.csv'}\n")
        with pytest.raises(ConfigError, match="seed"):
            load_config(path)

    def test_missing_data_file(self, tmp_path):
        cfg_path = write_config(tmp_path)
        with pytest.raises(ConfigError):
            load_config(cfg_path, {"ecdc_csv": str(tmp_path / "nope.csv")})

    def test_comments_and_blank_lines(self, tmp_path):
        path = write_config(tmp_path)
        text = "# a comment\n\n" + path.read_text() + "level = 0.05  # trailing\n"
        path.write_text(text)
        assert load_config(path).level == 0.05

    def test_parse_models(self):
        models = parse_models("lnEPU_US~lncases_US, lnEPU_UK~lndeaths_OUK")
        assert models == (("lnEPU_US", "lncases_US"), ("lnEPU_UK", "lndeaths_OUK"))
        with pytest.raises(ConfigError):
            parse_models("no-tilde")


@pytest.fixture(scope="module")
def small_report(tmp_path_factory):
    out = tmp_path_factory.mktemp("small")
    cfg = RunConfig(
        ecdc_csv=str(DATA / "ecdc_covid19_daily.csv"),
        epu_us_csv=str(DATA / "epu_us_daily.csv"),
        epu_uk_csv=str(DATA / "epu_uk_daily.csv"),
        seed=42, replications=100, out_dir=str(out),
    )
    return cfg, run_study(cfg)


class TestRunStudy:

    def test_low_b_notes_reduced_precision(self, small_report):
        _, report = small_report
        assert any("less precise" in n for n in report.notes)

    def test_ten_unit_root_rows(self, small_report):
        _, report = small_report
        assert len(report.unit_roots) == 10
        assert all(row["order"] != "I(2)+" for row in report.unit_roots)

    def test_eight_verdicts(self, small_report):
        _, report = small_report
        assert len(report.models) == 8
        assert not report.aborted

    def test_ecm_only_for_cointegrated(self, small_report):
        _, report = small_report
        for m in report.models:
            has_ecm = m.ecm is not None
            assert has_ecm == m.result.verdict.cointegrated
            assert (m.diagnostics is not None) == m.result.verdict.cointegrated

    def test_i2_series_aborts_with_name(self, small_report, monkeypatch):
        cfg, _ = small_report
        import bootardl.pipeline as pl

        real_build = pl.build_dataset

        def poisoned(window, ecdc, epu, count_mode="cumulative"):
            ds = real_build(window, ecdc, epu, count_mode=count_mode)
            rng = np.random.default_rng(1)
            from bootardl.series import TimeSeries
            bad = np.cumsum(np.cumsum(rng.standard_normal(79)))
            ds["lncases_US"] = TimeSeries("lncases_US", cfg.window_start, bad)
            return ds

        monkeypatch.setattr(pl, "build_dataset", poisoned)
        with pytest.raises(EstimationError, match="lncases_US"):
            run_study(cfg)

    def test_json_round_trip(self, small_report, tmp_path):
        cfg, report = small_report
        paths = emit_report(report, tmp_path, ("json",))
        loaded = json.loads(paths[0].read_text())
        assert loaded == report.to_dict()

    def test_emit_all_formats(self, small_report, tmp_path):
        _, report = small_report
        paths = emit_report(report, tmp_path, ("json", "text", "csv"))
        names = {p.name for p in paths}
        assert {"report.json", "report.txt", "unit_roots.csv", "cointegration.csv"} <= names
        if report.cointegrated:
            assert "ecm.csv" in names
            assert any(n.startswith("cusum_model") for n in names)
        text = (tmp_path / "report.txt").read_text()
        assert "Bootstrap cointegration tests" in text

    def test_empty_ecm_table_when_nothing_cointegrates(self, small_report, tmp_path):
        _, report = small_report
        import copy
        stripped = copy.deepcopy(report)
        for m in stripped.models:
            m.ecm = None
            m.diagnostics = None
            object.__setattr__(m.result.verdict, "classification",
                               type(m.result.verdict.classification).NO_COINTEGRATION)
        paths = emit_report(stripped, tmp_path / "none", ("csv",))
        names = {p.name for p in paths}
        assert "ecm.csv" not in names

    def test_determinism_small(self, small_report, tmp_path):
        cfg, report = small_report
        again = run_study(cfg)
        a = json.dumps(report.to_dict(), indent=2)
        b = json.dumps(again.to_dict(), indent=2)
        assert a == b

    def test_report_carries_fingerprints(self, small_report):
        _, report = small_report
        assert set(report.fingerprints) == {
            "ecdc_covid19_daily.csv", "epu_us_daily.csv", "epu_uk_daily.csv",
        }
        assert all(len(v) == 64 for v in report.fingerprints.values())


class TestDgps:
    def test_all_names_draw(self):
        rng = np.random.default_rng(5)
        for name in DGP_NAMES:
            y, x = draw_dgp(name, 80, rng)
            assert y.shape == (80,) and x.shape == (80,)
            assert np.all(np.isfinite(y)) and np.all(np.isfinite(x))

    def test_unknown_name(self):
        with pytest.raises(ConfigError):
            draw_dgp("nope", 80, np.random.default_rng(0))

    def test_deterministic(self):
        a = draw_dgp("cointegrated", 80, np.random.default_rng(9))
        b = draw_dgp("cointegrated", 80, np.random.default_rng(9))
        assert np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1])


class TestRunSizePower:
    def test_smoke_null(self):
        res = run_size_power("null-i1", runs=10, T=60, replications=100, seed=3)
        assert sum(res.classification_counts.values()) == 10
        rates = res.rates()
        assert 0.0 <= rates["cointegration_rate"] <= 1.0

    def test_power_smoke(self):
        res = run_size_power("cointegrated", runs=10, T=80, replications=100, seed=4)
        assert res.cointegration_rate >= 0.5

    def test_deterministic(self):
        a = run_size_power("null-i0", runs=5, T=60, replications=100, seed=8)
        b = run_size_power("null-i0", runs=5, T=60, replications=100, seed=8)
        assert a.classification_counts == b.classification_counts
