import inspect
import re
from typing import Callable, List, Sequence

from log_config import logger
from nsbell.cli_instance import app
from nsbell.sim.features.experiment_registry import registry


def validate_docstring(func: Callable, columns: Sequence[str]) -> List[str]:
    """
    Validate a command function's docstring against the standardized format.

    Command docstrings become the `--help` text, so they must carry a one-line
    summary, a description, and a "Columns:" section documenting every CSV column
    the command writes.

    Args:
        func: The function to validate
        columns: CSV header the command writes

    Returns:
        List of validation warnings, empty if docstring is valid
    """
    warnings = []
    docstring = inspect.getdoc(func)

    if not docstring:
        warnings.append(f"Command '{func.__name__}' has no docstring")
        return warnings

    lines = docstring.strip().split("\n")
    if not lines[0] or len(lines[0]) < 10:
        warnings.append(f"Command '{func.__name__}' is missing a clear one-line summary")

    if len(lines) < 3:
        warnings.append(f"Command '{func.__name__}' is missing a detailed description")

    if not any(line.strip().lower() == "columns:" for line in lines):
        warnings.append(f"Command '{func.__name__}' is missing 'Columns:' section")
        return warnings

    documented = set(re.findall(r"^\s*-\s*([a-zA-Z_][a-zA-Z0-9_]*)\s*:", docstring, re.MULTILINE))
    for column in columns:
        if column not in documented:
            warnings.append(f"Column '{column}' is not documented in the docstring of '{func.__name__}'")

    return warnings


def command(feature_id: str, name: str, columns: Sequence[str], validate: bool = True):
    """
    Decorator for CLI commands that registers them with the feature registry.

    The function is added to the shared Typer app under `name` and recorded in
    the experiment registry together with the CSV columns it writes.

    Args:
        feature_id: The ID of the feature this command belongs to
        name: Command name on the command line
        columns: CSV header the command writes
        validate: Whether to validate the command's docstring (defaults to True)

    Returns:
        Decorator function for command
    """
    def decorator(func: Callable) -> Callable:
        if validate:
            for warning in validate_docstring(func, columns):
                logger.warning(warning)

        app.command(name)(func)

        try:
            registry.register_command(feature_id, name, func, list(columns))
        except ValueError:
            logger.warning(
                f"Command '{name}' attempted to register with unknown feature '{feature_id}'. "
                f"Make sure to register the feature before registering commands."
            )

        return func

    return decorator
