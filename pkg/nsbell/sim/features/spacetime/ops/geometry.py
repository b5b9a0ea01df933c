from typing import Sequence, Tuple

import numpy as np

from log_config import logger
from nsbell.sim.features.spacetime.models.fields import MetricField, TetradField
from nsbell.sim.features.spacetime.models.residual_report import ResidualReport
from nsbell.sim.simulation_error import DomainError

ETA = np.diag([-1.0, 1.0, 1.0, 1.0])


def minkowski() -> Tuple[MetricField, TetradField]:
    """Flat metric in Cartesian coordinates (t, x, y, z) with the identity tetrad."""
    return (
        MetricField(name="minkowski", coordinates="t,x,y,z", evaluator=lambda x: ETA.copy()),
        TetradField(name="identity", evaluator=lambda x: np.eye(4)),
    )


def _lapse(mass: float, point: np.ndarray) -> float:
    """1 - 2M/r, checking that r lies outside the horizon."""
    r = point[1]
    if r <= 2.0 * mass:
        raise DomainError(
            f"Schwarzschild fields need r > 2M, got r={r} for M={mass}",
            operation="schwarzschild",
            details={"r": float(r), "M": mass},
        )
    return 1.0 - 2.0 * mass / r


def schwarzschild_static_tetrad(mass: float) -> Tuple[MetricField, TetradField]:
    """
    Schwarzschild metric and its static diagonal tetrad, units G = c = 1.

    Coordinates are (t, r, theta, phi); both fields raise DomainError for r <= 2M.

    Raises:
        DomainError: If mass is not positive
    """
    if mass <= 0:
        raise DomainError(f"mass must be positive, got {mass}", operation="schwarzschild_static_tetrad")

    def metric(point: np.ndarray) -> np.ndarray:
        f = _lapse(mass, point)
        r, theta = point[1], point[2]
        return np.diag([-f, 1.0 / f, r * r, (r * np.sin(theta)) ** 2])

    def tetrad(point: np.ndarray) -> np.ndarray:
        f = _lapse(mass, point)
        r, theta = point[1], point[2]
        return np.diag([np.sqrt(f), 1.0 / np.sqrt(f), r, r * np.sin(theta)])

    return (
        MetricField(name=f"schwarzschild(M={mass})", coordinates="t,r,theta,phi", evaluator=metric),
        TetradField(name=f"schwarzschild_static(M={mass})", evaluator=tetrad),
    )


def verify_tetrad(
    metric: MetricField,
    tetrad: TetradField,
    point: Sequence[float],
    tol: float = 1e-12,
) -> ResidualReport:
    """
    Check the orthonormality and inverse identities of a tetrad at a point.

    Args:
        metric: The metric the tetrad should diagonalize to eta
        tetrad: The tetrad under test
        point: Spacetime point in the metric's coordinates
        tol: Largest accepted max-norm residual

    Returns:
        The three residuals; `passed` tells whether all are within tol

    Raises:
        DomainError: If the point is outside the domain or the tetrad is singular there
    """
    g = metric.at(point)
    coframe = tetrad.at(point)
    frame = tetrad.inverse_at(point)
    identity = np.eye(4)
    report = ResidualReport(
        point=tuple(float(c) for c in point),
        frame=float(np.max(np.abs(frame.T @ g @ frame - ETA))),
        inverse_left=float(np.max(np.abs(frame @ coframe - identity))),
        inverse_right=float(np.max(np.abs(coframe @ frame - identity))),
        tol=tol,
    )
    logger.debug(f"verify_tetrad {tetrad.name} at {report.point}: max residual {report.max_residual:.3e}")
    return report


def lorentz_boost(rapidity: float, axis: int = 1) -> np.ndarray:
    """Boost along spatial axis 1, 2 or 3 acting on the Lorentz index."""
    if axis not in (1, 2, 3):
        raise DomainError(f"boost axis must be 1, 2 or 3, got {axis}", operation="lorentz_boost")
    boost = np.eye(4)
    boost[0, 0] = boost[axis, axis] = np.cosh(rapidity)
    boost[0, axis] = boost[axis, 0] = -np.sinh(rapidity)
    return boost


def local_rotation(angle: float, axis: int = 3) -> np.ndarray:
    """Spatial rotation about axis 1, 2 or 3 acting on the Lorentz index."""
    if axis not in (1, 2, 3):
        raise DomainError(f"rotation axis must be 1, 2 or 3, got {axis}", operation="local_rotation")
    i, j = [k for k in (1, 2, 3) if k != axis]
    rotation = np.eye(4)
    rotation[i, i] = rotation[j, j] = np.cos(angle)
    rotation[i, j] = -np.sin(angle)
    rotation[j, i] = np.sin(angle)
    return rotation
