import csv
import json
from pathlib import Path
from typing import Any, Dict, Iterable, Sequence

from log_config import logger
from nsbell import __version__
from nsbell.sim.features.shared.utils import NumpyEncoder, format_csv_value


def metadata_lines(command: str, config: Dict[str, Any], seed: int) -> list[str]:
    """Leading `#` comment block: tool version, full config, seed."""
    return [
        f"# nsbell {__version__}",
        f"# command: {command}",
        f"# config: {json.dumps(config, sort_keys=True, cls=NumpyEncoder)}",
        f"# seed: {seed}",
    ]


def write_csv(
    path: Path,
    command: str,
    config: Dict[str, Any],
    seed: int,
    columns: Sequence[str],
    rows: Iterable[Dict[str, Any]],
) -> int:
    """
    Write a result table with its metadata header.

    Args:
        path: Output file
        command: Command name recorded in the header
        config: Full run configuration, echoed as JSON
        seed: Base seed, always recorded
        columns: Fixed header row
        rows: Mappings from column name to value

    Returns:
        Number of data rows written

    Raises:
        OSError: If the file cannot be written
    """
    count = 0
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as handle:
        for line in metadata_lines(command, config, seed):
            handle.write(line + "\n")
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([format_csv_value(row[column]) for column in columns])
            count += 1
    logger.info(f"Wrote {count} rows to {path}")
    return count
