"""Public settings symbols and logger for convenience imports."""

from src.settings.config import (
    CSV_SIGNIFICANT_DIGITS,
    DEFAULT_SEED,
    OUTPUT_DIR,
    Settings,
    settings,
)
from src.settings.logger import custom_logger

__all__ = [
    "custom_logger",
    "CSV_SIGNIFICANT_DIGITS",
    "DEFAULT_SEED",
    "OUTPUT_DIR",
    "Settings",
    "settings",
]
