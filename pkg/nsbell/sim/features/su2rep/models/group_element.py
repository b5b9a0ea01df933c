import math
from typing import Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

from nsbell.nsbell_config import settings

TWO_PI = 2.0 * math.pi


def quaternion_to_su2(w: float, x: float, y: float, z: float) -> np.ndarray:
    """Unit quaternion to the SU(2) matrix wI - i(x sx + y sy + z sz)."""
    return np.array(
        [[w - 1j * z, -y - 1j * x], [y - 1j * x, w + 1j * z]],
        dtype=complex,
    )


def hamilton_product(p: Tuple[float, ...], q: Tuple[float, ...]) -> Tuple[float, float, float, float]:
    w1, x1, y1, z1 = p
    w2, x2, y2, z2 = q
    return (
        w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
        w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
        w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
        w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
    )


class GroupElementU2(BaseModel):
    """A U(2) channel realization: global phase e^{-i alpha} times an SU(2) part.

    The SU(2) part is stored as a unit quaternion (w, x, y, z). The pairs
    (q, alpha) and (-q, alpha + pi) describe the same U(2) matrix.
    """
    model_config = ConfigDict(frozen=True)

    alpha: float = 0.0
    q: Tuple[float, float, float, float] = (1.0, 0.0, 0.0, 0.0)

    @field_validator("alpha")
    @classmethod
    def validate_alpha(cls, value: float) -> float:
        if not (0.0 <= value < TWO_PI):
            raise ValueError(f"alpha must lie in [0, 2pi), got {value}")
        return value

    @field_validator("q")
    @classmethod
    def validate_unit_quaternion(cls, value: Tuple[float, float, float, float]) -> Tuple[float, float, float, float]:
        norm_sq = sum(c * c for c in value)
        if abs(norm_sq - 1.0) > settings.norm_tol:
            raise ValueError(f"quaternion must have unit norm, got squared norm {norm_sq:.15f}")
        return value

    @classmethod
    def from_parts(cls, alpha: float, q: Tuple[float, ...]) -> "GroupElementU2":
        """Build an element from an arbitrary phase and a non-zero quaternion, normalizing both."""
        norm = math.sqrt(sum(c * c for c in q))
        if norm == 0.0:
            raise ValueError("quaternion must be non-zero")
        w, x, y, z = (float(c) / norm for c in q)
        phase = float(alpha) % TWO_PI
        # tiny negative phases round up to exactly 2pi
        if phase >= TWO_PI:
            phase = 0.0
        return cls(alpha=phase, q=(w, x, y, z))

    @classmethod
    def identity(cls) -> "GroupElementU2":
        return cls()

    def su2_matrix(self) -> np.ndarray:
        """The SU(2) part Omega' as a 2x2 matrix."""
        return quaternion_to_su2(*self.q)

    def u2_matrix(self) -> np.ndarray:
        """The full U(2) matrix e^{-i alpha} Omega'."""
        return np.exp(-1j * self.alpha) * self.su2_matrix()

    def compose(self, other: "GroupElementU2") -> "GroupElementU2":
        """Group product self * other (apply `other` first)."""
        return GroupElementU2.from_parts(self.alpha + other.alpha, hamilton_product(self.q, other.q))

    def inverse(self) -> "GroupElementU2":
        w, x, y, z = self.q
        return GroupElementU2.from_parts(-self.alpha, (w, -x, -y, -z))

    def rotation_angle(self) -> float:
        """Angle in [0, pi] of the spatial rotation; the phase and the sign of q do not enter."""
        return 2.0 * math.acos(min(1.0, abs(self.q[0])))

    def __mul__(self, other: "GroupElementU2") -> "GroupElementU2":
        return self.compose(other)
