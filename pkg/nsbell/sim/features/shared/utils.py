import json
import math
from pathlib import Path
from typing import Any, Optional

import numpy as np


class NumpyEncoder(json.JSONEncoder):
    """Custom JSON encoder that can handle numpy scalars, arrays and paths."""
    def default(self, obj):
        if isinstance(obj, np.integer):
            return int(obj)
        if isinstance(obj, np.floating):
            return float(obj)
        if isinstance(obj, np.ndarray):
            return obj.tolist()
        if isinstance(obj, Path):
            return str(obj)
        return super().default(obj)


def format_tool_response(
    success: bool, data: Optional[Any] = None, error_message: Optional[str] = None
) -> str:
    """
    Format a consistent JSON response for command results.

    Args:
        success: Whether the command was successful
        data: The data to return on success
        error_message: The error message to return on failure

    Returns:
        JSON formatted string with success status and data or error
    """
    return json.dumps(
        {"success": success, "data": data, "error": error_message},
        indent=2,
        cls=NumpyEncoder,
    )


def format_validation_error(
    field_name: str, value: str, expected_format: str, example: str
) -> str:
    """
    Create a consistent validation error message with example.

    Args:
        field_name: Name of the field that failed validation
        value: The invalid value provided
        expected_format: Description of the expected format
        example: Example of valid value

    Returns:
        Formatted error message
    """
    return f"Invalid {field_name} format: '{value}'. {expected_format} Example: '{example}'"


def format_csv_value(value: Any) -> str:
    """
    Render one CSV cell deterministically.

    Floats use their shortest round-trip representation so repeated runs are
    byte-identical; NaN is written as "nan" and booleans as "true"/"false".
    """
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value):
            return "nan"
        return repr(value)
    if isinstance(value, np.integer):
        return str(int(value))
    return str(value)
