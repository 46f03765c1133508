from .bounds import (
    bounds_from_table,
    bounds_report,
    bounds_reports,
    iterated_witness_search,
    least_base_above,
    log_density,
    required_limit,
)
from .growth import growth_exponents, log_ratio, superpoly_witnesses
from .monotonicity import be_condition, monotonicity_scan
from .schur import schur_main_term, schur_ratio, schur_ratio_exact
from .theorem_checks import find_superpoly_witnesses, verify_theorem_pair

__all__ = [
    "bounds_from_table",
    "bounds_report",
    "bounds_reports",
    "iterated_witness_search",
    "least_base_above",
    "log_density",
    "required_limit",
    "growth_exponents",
    "log_ratio",
    "superpoly_witnesses",
    "be_condition",
    "monotonicity_scan",
    "schur_main_term",
    "schur_ratio",
    "schur_ratio_exact",
    "find_superpoly_witnesses",
    "verify_theorem_pair",
]
