"""Entry point of the `nsbell` command line."""

from typing import List, Optional

import click
import typer

from log_config import logger
from nsbell.cli_instance import app
from nsbell.sim.features import discover_features
from nsbell.sim.features.experiment_registry import registry
from nsbell.sim.features.shared.command_support import EXIT_FAULT, EXIT_OK, EXIT_USAGE


def run(argv: Optional[List[str]] = None) -> int:
    """
    Run one batch command and return its exit code.

    0 on success, 1 for usage errors, 2 for simulation or I/O faults.
    """
    try:
        discover_features()
    except Exception as e:
        logger.exception(f"Command table incomplete: {e}")
        return EXIT_FAULT
    logger.debug(f"Registered commands: {registry.get_command_count()}")
    cli = typer.main.get_command(app)
    try:
        result = cli.main(args=argv, prog_name="nsbell", standalone_mode=False)
    except click.exceptions.UsageError as e:
        e.show()
        return EXIT_USAGE
    except click.exceptions.ClickException as e:
        e.show()
        return EXIT_USAGE
    except click.exceptions.Abort:
        logger.error("Aborted")
        return EXIT_USAGE
    except Exception as e:
        logger.exception(f"Unexpected fault: {e}")
        return EXIT_FAULT
    return result if isinstance(result, int) else EXIT_OK
