"""Bootstrap ARDL cointegration toolkit.

Unit root screening, UECM estimation with Schwarz-criterion lag selection,
bootstrapped critical values for the three cointegration statistics,
error-correction estimates, regression diagnostics, and a reproducible
pipeline over daily EPU / epidemic-count data.
"""

__version__ = "0.1.0"

from bootardl.ardl import ArdlSpec, EcmEstimates, UECMFit, ecm_estimates, fit_uecm, select_lags
from bootardl.bootstrap import (
    BootstrapConfig,
    BootstrapCriticalValues,
    Classification,
    CointegrationVerdict,
    StatTriple,
    bootstrap_critical_values,
    coint_test,
    decide,
    null_dgp,
)
from bootardl.diagnostics import (
    arch_lm,
    breusch_godfrey,
    cusum_paths,
    full_report,
    jarque_bera,
    ramsey_reset,
    white_test,
)
from bootardl.regress import (
    LinearRestriction,
    RegressionFit,
    newey_west_lrv,
    ols_fit,
    recursive_residuals,
    t_statistic,
    wald_f,
)
from bootardl.series import TimeSeries, align, difference, lag, natural_log
from bootardl.unitroot import IntegrationOrder, Order, UnitRootResult, adf_test, classify_integration, pp_test

__all__ = [
    "ArdlSpec", "EcmEstimates", "UECMFit", "ecm_estimates", "fit_uecm", "select_lags",
    "BootstrapConfig", "BootstrapCriticalValues", "Classification",
    "CointegrationVerdict", "StatTriple", "bootstrap_critical_values",
    "coint_test", "decide", "null_dgp",
    "arch_lm", "breusch_godfrey", "cusum_paths", "full_report", "jarque_bera",
    "ramsey_reset", "white_test",
    "LinearRestriction", "RegressionFit", "newey_west_lrv", "ols_fit",
    "recursive_residuals", "t_statistic", "wald_f",
    "TimeSeries", "align", "difference", "lag", "natural_log",
    "IntegrationOrder", "Order", "UnitRootResult", "adf_test",
    "classify_integration", "pp_test",
    "__version__",
]
