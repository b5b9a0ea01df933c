import math
from typing import Tuple

import numpy as np

from log_config import logger
from nsbell.sim.features.su2rep.models.group_element import TWO_PI, GroupElementU2

# Squared norms below this count as a degenerate all-zero normal draw.
_DEGENERATE_NORM_SQ = 1e-24


def haar_sample(rng: np.random.Generator) -> GroupElementU2:
    """
    Draw one U(2) element from the Haar measure.

    The SU(2) part is uniform on the 3-sphere (four standard normals,
    normalized); the phase alpha is uniform on [0, 2pi). A degenerate draw is
    discarded and redrawn.

    Args:
        rng: Seeded random stream; the result is a pure function of its state

    Returns:
        A Haar-distributed group element
    """
    while True:
        q = rng.standard_normal(4)
        norm_sq = float(q @ q)
        if norm_sq > _DEGENERATE_NORM_SQ:
            break
        logger.warning("Degenerate quaternion draw, resampling")
    alpha = float(rng.uniform(0.0, TWO_PI))
    return GroupElementU2(alpha=alpha % TWO_PI, q=tuple(float(c) for c in q / math.sqrt(norm_sq)))


def haar_batch(rng: np.random.Generator, count: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Draw `count` Haar elements as arrays.

    Returns:
        Tuple of (alphas with shape (count,), unit quaternions with shape (count, 4))
    """
    q = rng.standard_normal((count, 4))
    norm_sq = np.einsum("ij,ij->i", q, q)
    degenerate = norm_sq <= _DEGENERATE_NORM_SQ
    while np.any(degenerate):
        logger.warning(f"Resampling {int(degenerate.sum())} degenerate quaternion draws")
        q[degenerate] = rng.standard_normal((int(degenerate.sum()), 4))
        norm_sq = np.einsum("ij,ij->i", q, q)
        degenerate = norm_sq <= _DEGENERATE_NORM_SQ
    q = q / np.sqrt(norm_sq)[:, None]
    alphas = rng.uniform(0.0, TWO_PI, size=count)
    return alphas, q


def su2_matrices(quaternions: np.ndarray) -> np.ndarray:
    """Batch of SU(2) matrices, shape (count, 2, 2), from unit quaternions."""
    w, x, y, z = (quaternions[:, k] for k in range(4))
    out = np.empty((quaternions.shape[0], 2, 2), dtype=complex)
    out[:, 0, 0] = w - 1j * z
    out[:, 0, 1] = -y - 1j * x
    out[:, 1, 0] = y - 1j * x
    out[:, 1, 1] = w + 1j * z
    return out


def u2_matrices(alphas: np.ndarray, quaternions: np.ndarray) -> np.ndarray:
    """Batch of U(2) matrices e^{-i alpha} Omega'."""
    return np.exp(-1j * alphas)[:, None, None] * su2_matrices(quaternions)
