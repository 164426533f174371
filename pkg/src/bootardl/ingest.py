"""Readers for the ECDC daily-count snapshot and daily EPU index files, and
the builder that turns them into the ten aligned log series of the study.

Per-country "outside" series are the world total minus the country, computed
date by date in integer arithmetic so conservation holds exactly. Counts
default to cumulative mode (monotone and strictly positive after the first
event, hence log-safe); daily mode is available but any zero inside the
window is an error rather than something to patch.
"""

from __future__ import annotations

import csv
import datetime as dt
from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from bootardl.errors import (
    CountryNotFound,
    DuplicateDate,
    EmptyInput,
    InsufficientOverlap,
    MissingColumn,
    NegativeCount,
    UnparseableDate,
)
from bootardl.series import TimeSeries, align, natural_log

# ECDC country identifiers for the two study countries.
COUNTRY_ALIASES = {
    "US": "United_States_of_America",
    "UK": "United_Kingdom",
}

SERIES_ORDER = (
    "lnEPU_US", "lnEPU_UK",
    "lncases_US", "lndeaths_US", "lncases_OUS", "lndeaths_OUS",
    "lncases_UK", "lndeaths_UK", "lncases_OUK", "lndeaths_OUK",
)


@dataclass(frozen=True)
class EcdcRecord:
    date: dt.date
    country: str
    cases: int
    deaths: int


@dataclass(frozen=True)
class StudyWindow:
    start: dt.date
    end: dt.date

    def __post_init__(self) -> None:
        if self.start >= self.end:
            raise ValueError(f"window start {self.start} not before end {self.end}")

    @property
    def days(self) -> int:
        return (self.end - self.start).days + 1


def read_ecdc(path) -> list[EcdcRecord]:
    """Parse an ECDC geographic-distribution CSV into one record per
    (date, country). Extra columns are ignored; malformed rows are rejected
    with their line numbers."""
    with open(path, newline="", encoding="utf-8-sig") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise EmptyInput(f"{path}: no header row")
        required = ("dateRep", "cases", "deaths", "countriesAndTerritories")
        missing = [c for c in required if c not in reader.fieldnames]
        if missing:
            raise MissingColumn(f"{path}: missing column(s) {missing}")
        records = []
        for lineno, row in enumerate(reader, start=2):
            raw_date = (row["dateRep"] or "").strip()
            try:
                day, month, year = raw_date.split("/")
                date = dt.date(int(year), int(month), int(day))
            except (ValueError, AttributeError) as exc:
                raise UnparseableDate(
                    f"{path}:{lineno}: cannot parse dateRep {raw_date!r} as DD/MM/YYYY"
                ) from exc
            try:
                cases = int(row["cases"])
                deaths = int(row["deaths"])
            except (TypeError, ValueError) as exc:
                raise NegativeCount(
                    f"{path}:{lineno}: non-integer count "
                    f"cases={row['cases']!r} deaths={row['deaths']!r}"
                ) from exc
            if cases < 0 or deaths < 0:
                raise NegativeCount(
                    f"{path}:{lineno}: negative count cases={cases} deaths={deaths}"
                )
            records.append(EcdcRecord(date, row["countriesAndTerritories"].strip(),
                                      cases, deaths))
    if not records:
        raise EmptyInput(f"{path}: no data rows")
    return records


def read_epu(path, name: str, index_column: str | None = None) -> TimeSeries:
    """Read a daily EPU file with year/month/day columns plus one index
    column (auto-detected unless named)."""
    with open(path, newline="", encoding="utf-8-sig") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise EmptyInput(f"{path}: no header row")
        fields = {c.strip().lower(): c for c in reader.fieldnames}
        for c in ("year", "month", "day"):
            if c not in fields:
                raise MissingColumn(f"{path}: missing column {c!r}")
        if index_column is None:
            extras = [c for c in reader.fieldnames
                      if c.strip().lower() not in ("year", "month", "day", "date")]
            if not extras:
                raise MissingColumn(f"{path}: no index value column found")
            index_column = extras[0]
        elif index_column not in reader.fieldnames:
            raise MissingColumn(f"{path}: missing column {index_column!r}")

        seen: dict[dt.date, float] = {}
        for lineno, row in enumerate(reader, start=2):
            try:
                date = dt.date(int(row[fields["year"]]), int(row[fields["month"]]),
                               int(row[fields["day"]]))
            except (TypeError, ValueError) as exc:
                raise UnparseableDate(f"{path}:{lineno}: bad year/month/day") from exc
            raw = (row[index_column] or "").strip()
            if not raw:
                continue  # trailing rows without values are common in EPU files
            if date in seen:
                raise DuplicateDate(f"{path}:{lineno}: duplicate date {date}")
            try:
                seen[date] = float(raw)
            except ValueError as exc:
                raise UnparseableDate(
                    f"{path}:{lineno}: bad index value {raw!r}"
                ) from exc
    if not seen:
        raise EmptyInput(f"{path}: no data rows")
    return TimeSeries.from_pairs(name, seen.items())


def _daily_totals(records: list[EcdcRecord]) -> tuple[dict[str, dict[dt.date, tuple[int, int]]], dict[dt.date, tuple[int, int]]]:
    by_country: dict[str, dict[dt.date, tuple[int, int]]] = defaultdict(dict)
    world: dict[dt.date, list[int]] = defaultdict(lambda: [0, 0])
    for r in records:
        prev = by_country[r.country].get(r.date, (0, 0))
        by_country[r.country][r.date] = (prev[0] + r.cases, prev[1] + r.deaths)
        world[r.date][0] += r.cases
        world[r.date][1] += r.deaths
    return by_country, {d: (c, x) for d, (c, x) in world.items()}


def build_series(
    records: list[EcdcRecord],
    country: str,
    measure: str,
    scope: str = "inside",
    mode: str = "cumulative",
) -> TimeSeries:
    """Daily or cumulative count series for a country or for the rest of the
    world (`scope="outside"`), named e.g. `cases_US` / `deaths_OUK`."""
    if measure not in ("cases", "deaths"):
        raise ValueError(f"measure must be 'cases' or 'deaths', got {measure!r}")
    if scope not in ("inside", "outside"):
        raise ValueError(f"scope must be 'inside' or 'outside', got {scope!r}")
    if mode not in ("cumulative", "daily"):
        raise ValueError(f"mode must be 'cumulative' or 'daily', got {mode!r}")

    ecdc_name = COUNTRY_ALIASES.get(country, country)
    by_country, world = _daily_totals(records)
    if ecdc_name not in by_country:
        raise CountryNotFound(
            f"country {country!r} ({ecdc_name!r}) not in records; "
            f"known: {sorted(by_country)[:8]}..."
        )
    mi = 0 if measure == "cases" else 1
    own = by_country[ecdc_name]
    if scope == "inside":
        pairs = [(d, float(v[mi])) for d, v in own.items()]
        label = f"{measure}_{country}"
    else:
        pairs = [(d, float(world[d][mi] - own.get(d, (0, 0))[mi])) for d in world]
        label = f"{measure}_O{country}"
    s = TimeSeries.from_pairs(label, pairs)
    if mode == "daily":
        return s
    return TimeSeries(s.name, s.start, np.cumsum(s.values))


def build_dataset(
    window: StudyWindow,
    ecdc_path,
    epu_paths: dict[str, str],
    count_mode: str = "cumulative",
) -> dict[str, TimeSeries]:
    """The ten aligned, log-transformed series of the study, keyed by name.

    epu_paths maps country code ("US", "UK") to its EPU CSV.
    """
    records = read_ecdc(ecdc_path)
    raw: list[TimeSeries] = []
    for country in ("US", "UK"):
        raw.append(read_epu(epu_paths[country], f"EPU_{country}"))
        for measure in ("cases", "deaths"):
            raw.append(build_series(records, country, measure, "inside", count_mode))
            raw.append(build_series(records, country, measure, "outside", count_mode))

    clipped = []
    for s in raw:
        if s.start > window.start or s.end < window.end:
            raise InsufficientOverlap(
                f"series {s.name!r} covers {s.start}..{s.end}, cannot serve "
                f"window {window.start}..{window.end}"
            )
        clipped.append(s.window(window.start, window.end))
    logged = {f"ln{s.name}": natural_log(s) for s in clipped}
    return {name: logged[name] for name in SERIES_ORDER}


def export_wide_csv(dataset: dict[str, TimeSeries], path) -> None:
    """Audit export: `date,<series...>` over the common span."""
    series = align(list(dataset.values()))
    names = [s.name for s in series]
    n = len(series[0])
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("date," + ",".join(names) + "\n")
        for i in range(n):
            row = ",".join(repr(float(s.values[i])) for s in series)
            fh.write(f"{series[0].date_at(i).isoformat()},{row}\n")
