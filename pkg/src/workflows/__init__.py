from src.workflows.corpus import random_sequences, random_step_function, random_step_functions
from src.workflows.families import (
    fh_ces_upper,
    fh_cesaro,
    fh_cesaro_by_quadrature,
    fh_cop_lower,
    fh_copson,
    fh_lower_bound,
    fh_norms,
    fh_ratio,
    fs_bound,
    fs_ces_norm,
    fs_certified_interp,
    fs_sweep,
)
from src.workflows.state import SuiteState
from src.workflows.suites import SUITES, run_suite

__all__ = [
    "SUITES",
    "SuiteState",
    "fh_ces_upper",
    "fh_cesaro",
    "fh_cesaro_by_quadrature",
    "fh_cop_lower",
    "fh_copson",
    "fh_lower_bound",
    "fh_norms",
    "fh_ratio",
    "fs_bound",
    "fs_ces_norm",
    "fs_certified_interp",
    "fs_sweep",
    "random_sequences",
    "random_step_function",
    "random_step_functions",
    "run_suite",
]
