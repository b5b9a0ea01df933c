from typing import List

from pydantic import Field, field_validator

from nsbell.sim.features.shared.run_config import RunConfig


class BirefConfig(RunConfig):
    """Options of the `biref` command; mu is swept, the rest is fixed."""

    k2: float = Field(1.0, gt=0, description="Coupling constant k^2")
    m_tilde: float = Field(1.0, gt=0, description="Torsion mass, inverse length")
    wavelength: float = Field(1.0, gt=0, description="Photon wavelength")
    radius: float = Field(1.0, gt=0, description="Stellar radius")
    mu: List[float] = Field(default_factory=lambda: [0.1, 0.25, 0.5, 0.75, 1.0], description="Line-of-sight cosines")

    @field_validator("mu")
    @classmethod
    def validate_mu(cls, value: List[float]) -> List[float]:
        if not value or any(not 0.0 < v <= 1.0 for v in value):
            raise ValueError("every mu must lie in (0, 1]")
        return value


class TetradCheckConfig(RunConfig):
    """Options of the `tetrad-check` command; radii are in units of the mass."""

    mass: float = Field(1.0, gt=0, description="Schwarzschild mass M")
    radii: List[float] = Field(default_factory=lambda: [3.0, 4.0, 10.0, 100.0], description="Radii in units of M")
    theta: float = Field(1.0, gt=0, lt=3.141592653589793, description="Polar angle of the sample points")
    tol: float = Field(1e-12, gt=0, description="Largest accepted residual")

    @field_validator("radii")
    @classmethod
    def validate_radii(cls, value: List[float]) -> List[float]:
        if not value or any(r <= 2.0 for r in value):
            raise ValueError("radii must lie outside the horizon (r > 2M)")
        return value
