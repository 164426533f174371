import datetime as dt
from pathlib import Path

import numpy as np
import pytest

from bootardl.pipeline import RunConfig
from bootardl.series import TimeSeries

REPO = Path(__file__).resolve().parent.parent
DATA = REPO / "data"

D0 = dt.date(2020, 1, 1)


def ts(values, name="s", start=D0):
    return TimeSeries(name, start, np.asarray(values, dtype=float))


@pytest.fixture(scope="session")
def snapshot_config(tmp_path_factory):
    out = tmp_path_factory.mktemp("study_out")
    return RunConfig(
        ecdc_csv=str(DATA / "ecdc_covid19_daily.csv"),
        epu_us_csv=str(DATA / "epu_us_daily.csv"),
        epu_uk_csv=str(DATA / "epu_uk_daily.csv"),
        seed=42,
        replications=2000,
        out_dir=str(out),
    )


@pytest.fixture(scope="session")
def snapshot_report(snapshot_config):
    from bootardl.pipeline import run_study

    return run_study(snapshot_config)
