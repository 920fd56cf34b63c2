"""CSV and JSON writers for reports, sweeps and K-curves."""

from pathlib import Path
from typing import Any, Iterable

import pandas as pd
from pydantic import BaseModel

from src.settings import CSV_SIGNIFICANT_DIGITS, custom_logger

# Create logger
logger = custom_logger("Table Writers")

SWEEP_COLUMNS = ["parameter", "value_lhs", "value_rhs", "bound", "pass"]
KCURVE_COLUMNS = ["t", "K", "lower_bound", "upper_bound"]


def to_frame(rows: Iterable[dict[str, Any] | BaseModel], columns: list[str] | None = None) -> pd.DataFrame:
    """Rows (dicts or models) as a DataFrame restricted to columns, in that order."""
    records = [r.model_dump(mode="json") if isinstance(r, BaseModel) else r for r in rows]
    frame = pd.DataFrame.from_records(records)
    if columns is not None:
        frame = frame.reindex(columns=columns)
    return frame


def write_csv(frame: pd.DataFrame, path: str | Path) -> Path:
    """Comma-separated, '.' decimal, 17 significant digits."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False, float_format=f"%.{CSV_SIGNIFICANT_DIGITS}g")
    logger.info(f"wrote {len(frame)} rows to {path}")
    return path


def write_json(model: BaseModel, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(model.model_dump_json(indent=2, by_alias=True), encoding="utf-8")
    logger.info(f"wrote {type(model).__name__} to {path}")
    return path
