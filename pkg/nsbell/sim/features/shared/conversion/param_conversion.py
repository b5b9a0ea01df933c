from typing import List, Optional, Tuple

from nsbell.sim.features.shared.utils import format_validation_error


def parse_float_list(values_str: Optional[str], field_name: str,
                     example: str = "0.25,0.5,1") -> Tuple[Optional[List[float]], Optional[str]]:
    """
    Convert a comma-separated string of numbers to a list of floats.

    Args:
        values_str: Comma-separated numbers
        field_name: Name of the field for error messages
        example: Example of valid format for error message

    Returns:
        Tuple of (values, error_message)
        If conversion succeeds, error_message is None
        If conversion fails, values is None and error_message contains the error
    """
    if values_str is None or not values_str.strip():
        return None, f"{field_name} must list at least one number. Example: '{example}'"

    values = []
    for item in values_str.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            values.append(float(item))
        except ValueError:
            return None, format_validation_error(field_name, item, "Entries must be numbers.", example)

    if not values:
        return None, f"{field_name} must list at least one number. Example: '{example}'"
    return values, None


def parse_int_list(values_str: Optional[str], field_name: str,
                   example: str = "1,10,100", minimum: int = 1) -> Tuple[Optional[List[int]], Optional[str]]:
    """
    Convert a comma-separated string of integers to a list of ints.

    Args:
        values_str: Comma-separated integers
        field_name: Name of the field for error messages
        example: Example of valid format for error message
        minimum: Smallest accepted value

    Returns:
        Tuple of (values, error_message)
    """
    if values_str is None or not values_str.strip():
        return None, f"{field_name} must list at least one integer. Example: '{example}'"

    values = []
    for item in values_str.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            value = int(item)
        except ValueError:
            return None, format_validation_error(field_name, item, "Entries must be integers only.", example)
        if value < minimum:
            return None, f"{field_name} entries must be at least {minimum}, got {value}. Example: '{example}'"
        values.append(value)

    if not values:
        return None, f"{field_name} must list at least one integer. Example: '{example}'"
    return values, None
