import json

import pytest

from bootardl.cli import main
from tests.conftest import DATA


@pytest.fixture()
def config_file(tmp_path):
    path = tmp_path / "study.cfg"
    path.write_text("\n".join([
        f"ecdc_csv = {DATA / 'ecdc_covid19_daily.csv'}",
        f"epu_us_csv = {DATA / 'epu_us_daily.csv'}",
        f"epu_uk_csv = {DATA / 'epu_uk_daily.csv'}",
        "seed = 42",
        "replications = 100",
        f"out_dir = {tmp_path / 'out'}",
    ]) + "\n")
    return path


def test_study_succeeds(config_file, tmp_path, capsys):
    rc = main(["study", "--config", str(config_file)])
    assert rc == 0
    out = capsys.readouterr().out
    assert "report.json" in out
    report = json.loads((tmp_path / "out" / "report.json").read_text())
    assert len(report["models"]) == 8


def test_config_error_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.cfg"
    bad.write_text("seed = 42\necdc_csv = /definitely/not/here.csv\n")
    rc = main(["study", "--config", str(bad)])
    assert rc == 2
    assert "config error" in capsys.readouterr().err


def test_data_error_exits_3(config_file, tmp_path, capsys):
    broken = tmp_path / "broken.csv"
    broken.write_text("dateRep,cases\n99/99/2020,5\n")
    text = config_file.read_text().replace(
        str(DATA / "ecdc_covid19_daily.csv"), str(broken))
    config_file.write_text(text)
    rc = main(["study", "--config", str(config_file)])
    assert rc == 3
    assert "data error" in capsys.readouterr().err


def test_coint_single_model(config_file, capsys):
    rc = main(["coint", "--config", str(config_file),
               "--model", "lnEPU_US~lncases_US", "--reps", "100"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["model"] == "lnEPU_US ~ lncases_US"
    assert "classification" in payload


def test_diag_single_model(config_file, capsys):
    rc = main(["diag", "--config", str(config_file), "--model", "lnEPU_UK~lncases_OUK"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert set(payload) >= {"LM", "White", "Ramsey", "JB", "ARCH", "cusum_stable"}


def test_unitroot_table(config_file, capsys):
    rc = main(["unitroot", "--config", str(config_file)])
    assert rc == 0
    rows = json.loads(capsys.readouterr().out)
    assert len(rows) == 10


def test_mc_subcommand(capsys):
    rc = main(["mc", "--dgp", "cointegrated", "--runs", "5", "--reps", "100",
               "-T", "80", "--seed", "3"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["runs"] == 5
    assert "cointegration_rate" in payload


def test_export_data(config_file, tmp_path, capsys):
    rc = main(["export-data", "--config", str(config_file)])
    assert rc == 0
    path = capsys.readouterr().out.strip()
    header = open(path).readline()
    assert header.startswith("date,lnEPU_US")


def test_window_override(config_file, capsys):
    rc = main(["unitroot", "--config", str(config_file),
               "--window", "2020-03-10:2020-05-20"])
    assert rc == 0


def test_bad_window_flag(config_file, capsys):
    rc = main(["unitroot", "--config", str(config_file), "--window", "bogus"])
    assert rc == 2
