from pathlib import Path
from typing import Any, Dict, List

import typer

from log_config import logger
from nsbell.nsbell_config import settings
from nsbell.sim.features.command_decorator import command
from nsbell.sim.features.shared.command_support import EXIT_USAGE, abort, build_config, execute
from nsbell.sim.features.shared.conversion.param_conversion import parse_float_list
from nsbell.sim.features.spacetime.models.fields import MetricField, TetradField
from nsbell.sim.features.spacetime.models.run_configs import TetradCheckConfig
from nsbell.sim.features.spacetime.ops.geometry import minkowski, schwarzschild_static_tetrad, verify_tetrad

TETRAD_COLUMNS = [
    "tetrad",
    "r",
    "theta",
    "frame_residual",
    "inverse_left_residual",
    "inverse_right_residual",
    "passed",
]


def _row(metric: MetricField, tetrad: TetradField, r: float, theta: float, tol: float) -> Dict[str, Any]:
    report = verify_tetrad(metric, tetrad, (0.0, r, theta, 0.0), tol=tol)
    return {
        "tetrad": tetrad.name,
        "r": r,
        "theta": theta,
        "frame_residual": report.frame,
        "inverse_left_residual": report.inverse_left,
        "inverse_right_residual": report.inverse_right,
        "passed": report.passed,
    }


def tetrad_rows(config: TetradCheckConfig) -> List[Dict[str, Any]]:
    """A flat-space control row, then the static Schwarzschild tetrad at every radius."""
    flat_metric, identity = minkowski()
    schwarzschild_metric, static = schwarzschild_static_tetrad(config.mass)
    first = config.radii[0] * config.mass
    rows = [_row(flat_metric, identity, first, config.theta, config.tol)]
    for radius in config.radii:
        rows.append(_row(schwarzschild_metric, static, radius * config.mass, config.theta, config.tol))
    failed = [row["r"] for row in rows if not row["passed"]]
    if failed:
        logger.warning(f"Tetrad identities violated beyond {config.tol} at r={failed}")
    return rows


@command("spacetime", "tetrad-check", columns=TETRAD_COLUMNS)
def tetrad_check(
    out: Path = typer.Option(Path("tetrad_check.csv"), "--out", help="Output CSV path."),
    seed: int = typer.Option(settings.default_seed, "--seed", help="64-bit unsigned base seed (recorded only)."),
    workers: int = typer.Option(1, "--workers", help="Worker processes (unused, the command is deterministic)."),
    mass: float = typer.Option(1.0, "--mass", help="Schwarzschild mass M."),
    radii: str = typer.Option("3,4,10,100", "--radii", help="Comma-separated radii in units of M, all > 2."),
    theta: float = typer.Option(1.0, "--theta", help="Polar angle of the sample points."),
    tol: float = typer.Option(1e-12, "--tol", help="Largest accepted residual."),
) -> None:
    """Verify the orthonormality and inverse identities of tetrad fields.

    Evaluates the residuals of e^mu_a e^nu_b g_mu_nu = eta_ab and of both
    inverse relations for the identity tetrad of flat space and for the static
    Schwarzschild tetrad at the requested radii.

    Columns:
        - tetrad: Name of the tetrad field
        - r: Radial coordinate of the sample point
        - theta: Polar angle of the sample point
        - frame_residual: Max-norm residual of the frame orthonormality
        - inverse_left_residual: Max-norm residual of frame times co-frame
        - inverse_right_residual: Max-norm residual of co-frame times frame
        - passed: Whether all three residuals are within --tol
    """
    logger.debug(
        f"Command 'tetrad-check' ENTERED with raw args: out={out}, mass={mass}, radii={radii}, "
        f"theta={theta}, tol={tol}"
    )
    radius_values, error = parse_float_list(radii, "radii", example="3,10,100")
    if error:
        abort(error, EXIT_USAGE)
    config = build_config(
        TetradCheckConfig, out=out, seed=seed, workers=workers,
        mass=mass, radii=radius_values, theta=theta, tol=tol,
    )
    execute("tetrad-check", config, TETRAD_COLUMNS, lambda: tetrad_rows(config))
