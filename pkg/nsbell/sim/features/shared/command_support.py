"""Plumbing shared by every batch command: config validation, CSV output, exit codes."""

from typing import Any, Callable, Dict, List, NoReturn, Sequence, Type, TypeVar

import typer
from pydantic import ValidationError

from log_config import logger
from nsbell.sim.features.shared.csv_output import write_csv
from nsbell.sim.features.shared.run_config import RunConfig
from nsbell.sim.features.shared.utils import format_tool_response
from nsbell.sim.simulation_error import SimulationError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAULT = 2

Config = TypeVar("Config", bound=RunConfig)


def abort(message: str, code: int) -> NoReturn:
    """Log the failure, print the JSON status document and leave with `code`."""
    logger.error(message)
    typer.echo(format_tool_response(False, error_message=message))
    raise typer.Exit(code=code)


def build_config(config_cls: Type[Config], **values: Any) -> Config:
    """
    Validate command options into a config model.

    Exits with EXIT_USAGE when validation fails.
    """
    try:
        return config_cls(**values)
    except ValidationError as e:
        abort(f"Validation error: {e}", EXIT_USAGE)


def execute(
    command: str,
    config: RunConfig,
    columns: Sequence[str],
    compute: Callable[[], List[Dict[str, Any]]],
) -> int:
    """
    Compute the result rows and write them with the metadata header.

    Simulation faults and I/O failures exit with EXIT_FAULT.

    Returns:
        Number of rows written
    """
    logger.info(f"Command '{command}' started with seed {config.seed} and {config.workers} worker(s)")
    try:
        rows = compute()
        count = write_csv(config.out, command, config.echo(), config.seed, columns, rows)
    except SimulationError as e:
        abort(f"Simulation fault in '{command}': {e}", EXIT_FAULT)
    except OSError as e:
        abort(f"Cannot write {config.out}: {e}", EXIT_FAULT)
    typer.echo(format_tool_response(True, data={"command": command, "out": str(config.out), "rows": count}))
    logger.info(f"Command '{command}' finished")
    return count
