"""Generate the vendored data snapshot under data/.

The sandbox cannot reach the original providers, so the snapshot is a
synthetic reconstruction in the original file schemas: daily ECDC-style
geographic-distribution rows (US, UK, and a Rest_of_World aggregate) and two
daily EPU index files. Cumulative count paths follow shape-preserving
monotone interpolations through milestone knots approximating the public
2020 trajectories; the US/UK EPU indices are generated with a stable
long-run tie to the US case count and the outside-UK case count
respectively. Everything is deterministic given SEED.

Run from the repository root:  python3 tools/make_snapshot.py
"""

from __future__ import annotations

import datetime as dt
from pathlib import Path

import numpy as np
from scipy.interpolate import PchipInterpolator

SEED = 20200307
ORIGIN = dt.date(2019, 12, 31)          # day index 0
LAST = dt.date(2020, 5, 26)            # day index 147
N_DAYS = (LAST - ORIGIN).days + 1
WINDOW_START = 67                       # 2020-03-07
WINDOW_END = 145                        # 2020-05-24
EPU_START = 46                          # 2020-02-15

OUT = Path(__file__).resolve().parent.parent / "data"

# (day, cumulative count) milestone knots
KNOTS_US_CASES = [(21, 1), (32, 8), (46, 15), (61, 75), (67, 430), (75, 3500),
                  (82, 33000), (92, 213000), (106, 640000), (122, 1100000),
                  (136, 1450000), (145, 1620000), (165, 2050000)]
KNOTS_US_DEATHS = [(60, 1), (67, 19), (75, 63), (82, 420), (92, 4760),
                   (106, 28000), (122, 63000), (136, 87000), (145, 97700),
                   (165, 110000)]
KNOTS_UK_CASES = [(31, 2), (46, 9), (61, 36), (67, 206), (75, 1390),
                  (92, 29500), (106, 98000), (122, 177000), (136, 236000),
                  (145, 259600), (165, 290000)]
KNOTS_UK_DEATHS = [(65, 1), (67, 2), (75, 35), (92, 2350), (106, 12900),
                   (122, 27500), (136, 33600), (145, 36800), (165, 41000)]
KNOTS_RW_CASES_PRE = [(0, 27), (21, 440), (31, 9800), (46, 69000), (61, 87000)]
KNOTS_RW_DEATHS_PRE = [(9, 1), (21, 9), (31, 213), (46, 1660), (61, 2900)]

# window-anchored log-affine ties of the Rest_of_World paths to the smooth US
# case path (drives the outside-country series' co-movement)
RW_CASES_AT = (104_400.0, 3_420_000.0)
RW_DEATHS_AT = (3_580.0, 208_400.0)

EPU_US_CONST, EPU_US_THETA = 3.416, 0.197
EPU_UK_CONST, EPU_UK_THETA = 2.835, 0.220
EPU_AR, EPU_SD = 0.15, 0.03

INCREMENT_NOISE_SD = 0.22

# epidemic-timing warps (days of acceleration/deceleration) applied to the
# within-country series; they decouple those curves' shapes from the outside
# aggregates while keeping the paths monotone
WARPS = {
    ("US", "deaths"): (11.7, 130.0, 67.0),   # (amplitude, period, phase day)
    ("UK", "cases"): (-10.4, 120.0, 72.0),
    ("UK", "deaths"): (13.0, 140.0, 80.0),
}


def _log_curve(knots: list[tuple[int, int]]) -> tuple[int, PchipInterpolator]:
    days = np.array([d for d, _ in knots], dtype=float)
    logs = np.log([c for _, c in knots])
    return int(days[0]), PchipInterpolator(days, logs)


def smooth_cumulative(knots, warp: tuple[float, float, float] | None = None) -> np.ndarray:
    first, f = _log_curve(knots)
    d = np.arange(N_DAYS, dtype=float)
    out = np.zeros(N_DAYS)
    arg = d[first:]
    if warp is not None:
        amp, period, phase = warp
        arg = arg + amp * np.sin(2.0 * np.pi * (arg - phase) / period)
        arg = np.clip(arg, first, 165.0)
        arg = np.maximum.accumulate(arg)
    out[first:] = np.exp(f(arg))
    return out


def tied_cumulative(pre_knots, anchors, us_log_smooth: np.ndarray) -> np.ndarray:
    """Pre-window interpolation, then log-affine in the smooth US case path."""
    lo, hi = np.log(anchors[0]), np.log(anchors[1])
    g0, g1 = us_log_smooth[WINDOW_START], us_log_smooth[WINDOW_END]
    slope = (hi - lo) / (g1 - g0)
    intercept = lo - slope * g0
    first, f = _log_curve(pre_knots + [(WINDOW_START, anchors[0])])
    out = np.zeros(N_DAYS)
    d = np.arange(N_DAYS, dtype=float)
    out[first:WINDOW_START] = np.exp(f(d[first:WINDOW_START]))
    out[WINDOW_START:] = np.exp(intercept + slope * us_log_smooth[WINDOW_START:])
    return out


# reporting cycle (Tue-first, ORIGIN is a Tuesday): weekend under-reporting
# cleared early the following week
WEEKDAY_EFFECT = np.array([0.12, 0.18, 0.05, 0.02, -0.05, -0.42, -0.30])


def to_daily_counts(cumulative: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Integer daily increments with a day-of-week reporting cycle and mild
    multiplicative noise."""
    inc = np.diff(cumulative, prepend=0.0)
    cycle = WEEKDAY_EFFECT[np.arange(inc.size) % 7]
    noisy = inc * np.exp(cycle + rng.normal(0.0, INCREMENT_NOISE_SD, inc.size))
    return np.maximum(np.rint(noisy), 0.0).astype(int)


def ar1_path(rng: np.random.Generator, n: int, phi: float, sd: float) -> np.ndarray:
    u = np.empty(n)
    u[0] = rng.normal(0.0, sd / np.sqrt(1.0 - phi**2))
    eps = rng.normal(0.0, sd, n)
    for t in range(1, n):
        u[t] = phi * u[t - 1] + eps[t]
    return u


def main() -> None:
    rng = np.random.default_rng(SEED)
    OUT.mkdir(exist_ok=True)

    us_cases_sm = smooth_cumulative(KNOTS_US_CASES)
    us_log_sm = np.where(us_cases_sm > 0, np.log(np.maximum(us_cases_sm, 1e-9)), 0.0)

    daily = {
        ("US", "cases"): to_daily_counts(us_cases_sm, rng),
        ("US", "deaths"): to_daily_counts(
            smooth_cumulative(KNOTS_US_DEATHS, WARPS.get(("US", "deaths"))), rng),
        ("UK", "cases"): to_daily_counts(
            smooth_cumulative(KNOTS_UK_CASES, WARPS.get(("UK", "cases"))), rng),
        ("UK", "deaths"): to_daily_counts(
            smooth_cumulative(KNOTS_UK_DEATHS, WARPS.get(("UK", "deaths"))), rng),
        ("RW", "cases"): to_daily_counts(
            tied_cumulative(KNOTS_RW_CASES_PRE, RW_CASES_AT, us_log_sm), rng),
        ("RW", "deaths"): to_daily_counts(
            tied_cumulative(KNOTS_RW_DEATHS_PRE, RW_DEATHS_AT, us_log_sm), rng),
    }

    countries = {
        "US": ("United_States_of_America", "US", "USA", 327167434),
        "UK": ("United_Kingdom", "UK", "GBR", 66488991),
        "RW": ("Rest_of_World", "RW", "RWD", 7200000000),
    }
    ecdc = OUT / "ecdc_covid19_daily.csv"
    with open(ecdc, "w", encoding="utf-8") as fh:
        fh.write("dateRep,day,month,year,cases,deaths,countriesAndTerritories,"
                 "geoId,countryterritoryCode,popData2018\n")
        for d in range(N_DAYS - 1, -1, -1):    # newest first, as in the source files
            date = ORIGIN + dt.timedelta(days=d)
            for key in ("US", "UK", "RW"):
                name, geo, code, pop = countries[key]
                fh.write(f"{date.day:02d}/{date.month:02d}/{date.year},"
                         f"{date.day},{date.month},{date.year},"
                         f"{daily[(key, 'cases')][d]},{daily[(key, 'deaths')][d]},"
                         f"{name},{geo},{code},{pop}\n")

    cum = {k: np.cumsum(v) for k, v in daily.items()}
    ln_us_cases = np.log(np.maximum(cum[("US", "cases")], 1))
    ln_ouk_cases = np.log(np.maximum(cum[("RW", "cases")] + cum[("US", "cases")], 1))

    n_epu = N_DAYS - EPU_START
    u_us = ar1_path(rng, n_epu, EPU_AR, EPU_SD)
    u_uk = ar1_path(rng, n_epu, EPU_AR, EPU_SD)
    epu_us = np.exp(EPU_US_CONST + EPU_US_THETA * ln_us_cases[EPU_START:] + u_us)
    epu_uk = np.exp(EPU_UK_CONST + EPU_UK_THETA * ln_ouk_cases[EPU_START:] + u_uk)

    for code, column, values in (("us", "daily_policy_index", epu_us),
                                 ("uk", "UK_EPU", epu_uk)):
        with open(OUT / f"epu_{code}_daily.csv", "w", encoding="utf-8") as fh:
            fh.write(f"year,month,day,{column}\n")
            for i in range(n_epu):
                date = ORIGIN + dt.timedelta(days=EPU_START + i)
                fh.write(f"{date.year},{date.month},{date.day},{values[i]:.2f}\n")

    for key in ("US", "UK", "RW"):
        c, x = cum[(key, "cases")][WINDOW_END], cum[(key, "deaths")][WINDOW_END]
        print(f"{key}: cumulative cases {c:,} deaths {x:,} at {ORIGIN + dt.timedelta(days=WINDOW_END)}")
    print(f"EPU US range on window: {epu_us[WINDOW_START - EPU_START]:.1f}"
          f" .. {epu_us[WINDOW_END - EPU_START]:.1f}")
    print(f"EPU UK range on window: {epu_uk[WINDOW_START - EPU_START]:.1f}"
          f" .. {epu_uk[WINDOW_END - EPU_START]:.1f}")
    print(f"wrote {ecdc}")


if __name__ == "__main__":
    main()
