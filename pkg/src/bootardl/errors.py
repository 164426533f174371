"""Exception hierarchy.

Three branches matter to callers: configuration problems (CLI exit code 2),
data problems (exit code 3), and estimation failures (exit code 4).
"""

from __future__ import annotations


class BootArdlError(Exception):
    """Base class for every error raised by this package."""


class ConfigError(BootArdlError):
    """Invalid run configuration (bad paths, malformed keys, bad values)."""


class DataError(BootArdlError):
    """Input data violates a precondition of the requested operation."""


class EstimationError(BootArdlError):
    """A statistical computation cannot be carried out on the given inputs."""


# --- data errors -------------------------------------------------------------

class NonPositiveValue(DataError):
    """A value that must be strictly positive (e.g. before a log) is not."""


class SeriesTooShort(DataError):
    """Series has too few observations for the requested transform or test."""


class InsufficientOverlap(DataError):
    """Date spans of the series to align share fewer observations than required."""


class GapInDates(DataError):
    """Daily series has a missing calendar day inside its span."""


class MissingColumn(DataError):
    """Input file lacks a required column."""


class UnparseableDate(DataError):
    """A date field could not be parsed."""


class NegativeCount(DataError):
    """A case/death count is negative."""


class DuplicateDate(DataError):
    """The same date appears twice in one input series."""


class EmptyInput(DataError):
    """Input file contains no data rows."""


class CountryNotFound(DataError):
    """Requested country absent from the ingested records."""


# --- estimation errors --------------------------------------------------------

class RankDeficient(EstimationError):
    """Design matrix is numerically rank deficient."""


class TooFewObservations(EstimationError):
    """Fewer observations than regressors."""


class SingularRestrictionCovariance(EstimationError):
    """R V R' is singular; the Wald statistic is undefined."""


class BandwidthTooLarge(EstimationError):
    """Long-run variance bandwidth is not smaller than the sample length."""


class DegenerateLongRun(EstimationError):
    """Coefficient on the lagged dependent level is (numerically) zero."""


class InvalidLagCount(EstimationError):
    """A diagnostic was requested with a non-positive lag or power count."""


class NoRegressorsToTest(EstimationError):
    """The model has no non-constant regressors for the requested test."""


class BootstrapFailure(EstimationError):
    """Too many bootstrap replications failed to estimate."""
