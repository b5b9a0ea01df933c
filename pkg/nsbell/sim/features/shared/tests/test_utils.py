import json
from pathlib import Path

import numpy as np

from nsbell.sim.features.shared.utils import (
    NumpyEncoder,
    format_csv_value,
    format_tool_response,
    format_validation_error,
)


class TestNumpyEncoder:
    def test_numpy_values(self):
        data = {"i": np.int64(3), "f": np.float64(0.5), "a": np.arange(3), "p": Path("out.csv")}

        parsed = json.loads(json.dumps(data, cls=NumpyEncoder))

        assert parsed == {"i": 3, "f": 0.5, "a": [0, 1, 2], "p": "out.csv"}


class TestFormatToolResponse:
    def test_success_response_with_data(self):
        parsed = json.loads(format_tool_response(True, data={"rows": 3}))

        assert parsed == {"success": True, "data": {"rows": 3}, "error": None}

    def test_error_response(self):
        parsed = json.loads(format_tool_response(False, error_message="boom"))

        assert parsed["success"] is False
        assert parsed["data"] is None
        assert parsed["error"] == "boom"


class TestFormatValidationError:
    def test_message(self):
        message = format_validation_error("mu", "x", "Must be a number.", "0.5")

        assert message == "Invalid mu format: 'x'. Must be a number. Example: '0.5'"


class TestFormatCsvValue:
    def test_floats_round_trip(self):
        """Floats use the shortest repr so output is stable and lossless"""
        value = 0.1 + 0.2
        assert format_csv_value(value) == repr(value)
        assert float(format_csv_value(np.float64(np.pi))) == np.pi

    def test_special_values(self):
        assert format_csv_value(float("nan")) == "nan"
        assert format_csv_value(True) == "true"
        assert format_csv_value(np.bool_(False)) == "false"
        assert format_csv_value(np.int32(7)) == "7"
        assert format_csv_value("exact") == "exact"
