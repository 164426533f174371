"""Date-indexed daily time series and the transforms downstream modules consume.

Series are contiguous daily data: a missing calendar day is a construction
error, never something to impute. Values are immutable after construction so
series can be shared freely across bootstrap workers.
"""

from __future__ import annotations

import datetime as dt
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field

import numpy as np

from bootardl.errors import (
    GapInDates,
    InsufficientOverlap,
    NonPositiveValue,
    SeriesTooShort,
)

MIN_OVERLAP = 10

_ONE_DAY = dt.timedelta(days=1)


@dataclass(frozen=True)
class TimeSeries:
    """A named, contiguous daily series of real observations.

    Parameters
    ----------
    name : str
        Label carried through transforms and reports.
    start : datetime.date
        Calendar date of the first observation.
    values : array_like
        One finite float per day, starting at `start`.
    """

    name: str
    start: dt.date
    values: np.ndarray

    def __post_init__(self) -> None:
        vals = np.asarray(self.values, dtype=float)
        if vals.ndim != 1:
            raise ValueError(f"series {self.name!r}: values must be 1-d")
        if vals.size == 0:
            raise SeriesTooShort(f"series {self.name!r} is empty")
        if not np.all(np.isfinite(vals)):
            bad = int(np.flatnonzero(~np.isfinite(vals))[0])
            raise GapInDates(
                f"series {self.name!r}: non-finite value at {self.date_at(bad)}"
            )
        vals = vals.copy()
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return self.values.size

    @property
    def end(self) -> dt.date:
        return self.start + (len(self) - 1) * _ONE_DAY

    def date_at(self, i: int) -> dt.date:
        return self.start + i * _ONE_DAY

    @property
    def dates(self) -> tuple[dt.date, ...]:
        return tuple(self.start + i * _ONE_DAY for i in range(len(self)))

    @classmethod
    def from_pairs(cls, name: str, pairs: Iterable[tuple[dt.date, float]]) -> "TimeSeries":
        """Build from (date, value) pairs, rejecting gaps and duplicates."""
        items = sorted(pairs, key=lambda p: p[0])
        if not items:
            raise SeriesTooShort(f"series {name!r} has no observations")
        dates = [d for d, _ in items]
        for prev, cur in zip(dates, dates[1:]):
            if cur == prev:
                raise GapInDates(f"series {name!r}: duplicate date {cur}")
            if cur - prev != _ONE_DAY:
                raise GapInDates(
                    f"series {name!r}: gap between {prev} and {cur} (daily data required)"
                )
        return cls(name, dates[0], np.array([v for _, v in items], dtype=float))

    def rename(self, name: str) -> "TimeSeries":
        return TimeSeries(name, self.start, self.values)

    def window(self, start: dt.date, end: dt.date) -> "TimeSeries":
        """Clip to [start, end] inclusive; both dates must lie inside the span."""
        if start < self.start or end > self.end or start > end:
            raise InsufficientOverlap(
                f"series {self.name!r} spans {self.start}..{self.end}, "
                f"cannot clip to {start}..{end}"
            )
        i = (start - self.start).days
        j = (end - self.start).days + 1
        return TimeSeries(self.name, start, self.values[i:j])

    def to_csv(self, path) -> None:
        """Write `date,value` rows, ISO dates, full-precision values."""
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("date,value\n")
            for i, v in enumerate(self.values):
                fh.write(f"{self.date_at(i).isoformat()},{float(v)!r}\n")


def natural_log(s: TimeSeries) -> TimeSeries:
    """Element-wise natural logarithm; dates unchanged, name prefixed with `ln`.

    Raises
    ------
    NonPositiveValue
        Naming the series and the first offending date.
    """
    bad = np.flatnonzero(s.values <= 0.0)
    if bad.size:
        i = int(bad[0])
        raise NonPositiveValue(
            f"series {s.name!r}: value {s.values[i]!r} at {s.date_at(i)} "
            "is not strictly positive, cannot take logs"
        )
    return TimeSeries(f"ln{s.name}", s.start, np.log(s.values))


def difference(s: TimeSeries, order: int = 1) -> TimeSeries:
    """`order`-fold first difference; drops the first `order` observations."""
    if order < 1:
        raise ValueError("difference order must be a positive integer")
    if len(s) <= order:
        raise SeriesTooShort(
            f"series {s.name!r}: length {len(s)} too short for order-{order} difference"
        )
    return TimeSeries(s.name, s.start + order * _ONE_DAY, np.diff(s.values, n=order))


def lag(s: TimeSeries, k: int) -> TimeSeries:
    """Shift so the observation dated t is the original value at t-k."""
    if k < 0:
        raise ValueError("lag must be nonnegative")
    if k == 0:
        return s
    if len(s) <= k:
        raise SeriesTooShort(
            f"series {s.name!r}: length {len(s)} too short for lag {k}"
        )
    return TimeSeries(s.name, s.start + k * _ONE_DAY, s.values[:-k])


def align(series: Sequence[TimeSeries], min_overlap: int = MIN_OVERLAP) -> list[TimeSeries]:
    """Clip every series to the intersection of their date spans.

    Raises
    ------
    InsufficientOverlap
        If the common span holds fewer than `min_overlap` observations.
    """
    if not series:
        return []
    start = max(s.start for s in series)
    end = min(s.end for s in series)
    n = (end - start).days + 1
    if n < min_overlap:
        raise InsufficientOverlap(
            f"series {[s.name for s in series]} overlap on {max(n, 0)} observations, "
            f"need at least {min_overlap}"
        )
    return [s.window(start, end) for s in series]


@dataclass(frozen=True)
class Column:
    """One regressor column: `source` series, optionally differenced, then lagged."""

    source: str
    lag: int = 0
    diff: bool = False

    @property
    def presample(self) -> int:
        return self.lag + (1 if self.diff else 0)

    @property
    def label(self) -> str:
        base = f"d({self.source})" if self.diff else self.source
        return f"{base}[t]" if self.lag == 0 else f"{base}[t-{self.lag}]"


@dataclass(frozen=True)
class LaggedDesign:
    """Recipe for a regression design built from lags/differences of named series.

    The effective sample drops exactly `presample` observations from the front
    of the common span, so every realized column has the same length as the
    dependent column.
    """

    dependent: Column
    columns: tuple[Column, ...]
    constant: bool = True

    @property
    def presample(self) -> int:
        return max([self.dependent.presample, *(c.presample for c in self.columns)])

    @property
    def labels(self) -> tuple[str, ...]:
        names = ("const",) if self.constant else ()
        return names + tuple(c.label for c in self.columns)

    def realize(self, series: Mapping[str, TimeSeries]) -> "RealizedDesign":
        """Evaluate the recipe over the common span of the referenced series."""
        needed = {self.dependent.source, *(c.source for c in self.columns)}
        aligned = {s.name: s for s in align([series[n] for n in sorted(needed)],
                                            min_overlap=self.presample + 2)}
        span = len(next(iter(aligned.values())))
        t0 = self.presample
        n = span - t0
        if n < 1:
            raise SeriesTooShort(
                f"common span of {sorted(needed)} ({span} obs) shorter than "
                f"presample {t0}"
            )

        def column_values(c: Column) -> np.ndarray:
            v = aligned[c.source].values
            if c.diff:
                v = np.diff(v)
                # after differencing, index i of v corresponds to span index i+1
                return v[t0 - 1 - c.lag:span - 1 - c.lag]
            return v[t0 - c.lag:span - c.lag]

        y = column_values(self.dependent)
        cols = [column_values(c) for c in self.columns]
        if self.constant:
            cols.insert(0, np.ones(n))
        X = np.column_stack(cols) if cols else np.empty((n, 0))
        start = next(iter(aligned.values())).start + t0 * _ONE_DAY
        return RealizedDesign(self, X, y, start, self.labels)


@dataclass(frozen=True)
class RealizedDesign:
    """A LaggedDesign evaluated on concrete data: y vector plus X matrix."""

    spec: LaggedDesign
    X: np.ndarray
    y: np.ndarray
    start: dt.date
    names: tuple[str, ...] = field(default=())

    @property
    def nobs(self) -> int:
        return self.y.size
