"""Tests for step-function files and table writers."""

import json

import pandas as pd
import pytest

from src.core.errors import DomainError
from src.structs import Domain, Report, StepFunction
from src.utils import (
    KCURVE_COLUMNS,
    format_function_spec,
    parse_function_spec,
    read_function_spec,
    to_frame,
    write_csv,
    write_function_spec,
    write_json,
)

SAMPLE = """\
# three pieces on [0, 1]
domain unit
0
0.25 2.0   # first piece
0.5 0
1 1.5
"""


class TestParse:
    """Text form of step functions."""

    def test_unit(self):
        """Breakpoints and values are read in order."""
        f = parse_function_spec(SAMPLE)
        assert f.breaks == (0.0, 0.25, 0.5, 1.0)
        assert f.vals == (2.0, 0.0, 1.5)
        assert f.domain.is_unit

    def test_halfline(self):
        """The half-line header carries its truncation."""
        f = parse_function_spec("domain halfline 16\n0\n2 1\n4 0.5\n")
        assert f.domain == Domain.halfline(16.0)
        assert f.end == 4.0

    def test_round_trip_exact(self, tmp_path):
        """Written files read back to the same function."""
        f = StepFunction.from_arrays([0.0, 1 / 3, 0.7, 1.0], [0.1, 1e-3, 2 / 3])
        path = write_function_spec(f, tmp_path / "nested" / "f.txt")
        assert read_function_spec(path) == f
        assert parse_function_spec(format_function_spec(f)) == f

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "0\n1 1\n",
            "domain torus\n0\n1 1\n",
            "domain unit\n",
            "domain unit\n0 1\n1 1\n",
            "domain unit\n0\n1\n",
            "domain unit\n0\n1 abc\n",
            "domain unit\n0\n0.5 1\n",
            "domain unit\n0\n1 -1\n",
        ],
    )
    def test_malformed(self, text):
        """Malformed files raise DomainError."""
        with pytest.raises(DomainError):
            parse_function_spec(text)


class TestTables:
    """CSV and JSON writers."""

    def test_to_frame_columns(self):
        """Frames keep the requested columns in order, filling gaps."""
        frame = to_frame([{"K": 1.0, "t": 0.5}], KCURVE_COLUMNS)
        assert list(frame.columns) == KCURVE_COLUMNS
        assert pd.isna(frame.loc[0, "lower_bound"])

    def test_csv_precision(self, tmp_path):
        """Floats are written with 17 significant digits."""
        path = write_csv(to_frame([{"t": 1 / 3, "K": 0.1}]), tmp_path / "out" / "k.csv")
        back = pd.read_csv(path, float_precision="round_trip")
        assert back.loc[0, "t"] == 1 / 3
        assert back.loc[0, "K"] == 0.1

    def test_json(self, tmp_path):
        """Reports serialise with the computed pass flag."""
        path = write_json(Report(suite="ap", seed=7), tmp_path / "r.json")
        data = json.loads(path.read_text())
        assert data["suite"] == "ap"
        assert data["passed"] is True
