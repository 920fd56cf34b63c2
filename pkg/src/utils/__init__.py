from src.utils.function_io import (
    format_function_spec,
    parse_function_spec,
    read_function_spec,
    write_function_spec,
)
from src.utils.tables import KCURVE_COLUMNS, SWEEP_COLUMNS, to_frame, write_csv, write_json

__all__ = [
    "KCURVE_COLUMNS",
    "SWEEP_COLUMNS",
    "format_function_spec",
    "parse_function_spec",
    "read_function_spec",
    "to_frame",
    "write_csv",
    "write_json",
    "write_function_spec",
]
