"""
nsbell Configuration Module

This module provides centralized numeric tolerances and run defaults for the simulator.
"""

from pydantic import BaseModel, Field, field_validator


class SimulationSettings(BaseModel):
    """
    Pydantic model for simulator-wide settings.

    Tolerances are the contract values used by the domain-type validators; the
    remaining fields are defaults for the command-line runner. Settings are
    never read from files or the environment.
    """

    # Domain-type tolerances
    norm_tol: float = Field(1e-12, description="Allowed deviation of a pure state's squared norm from 1")
    hermitian_tol: float = Field(1e-12, description="Max-norm tolerance for Hermiticity checks")
    trace_tol: float = Field(1e-12, description="Allowed deviation of a density operator's trace from 1")
    psd_floor: float = Field(-1e-10, description="Smallest eigenvalue accepted as positive semidefinite")
    unitary_tol: float = Field(1e-10, description="Max-norm tolerance for unitarity checks")
    imag_tol: float = Field(1e-10, description="Largest imaginary part discarded from an expectation value")
    reject_tol: float = Field(1e-12, description="Distance from 1 at which a reject probability counts as certain")

    # Monte Carlo
    mc_chunk_size: int = Field(2048, description="Group elements processed per vectorized batch")

    # Runner defaults
    default_seed: int = Field(20051101, description="Seed used when the CLI is given none")
    phi_steps: int = Field(200, description="Points of the default phi grid on [0, pi/2]")

    @field_validator("norm_tol", "hermitian_tol", "trace_tol", "unitary_tol", "imag_tol", "reject_tol")
    @classmethod
    def validate_positive_tolerance(cls, value, info):
        """Tolerances must be positive and small."""
        if value <= 0 or value >= 1e-3:
            raise ValueError(f"{info.field_name} must lie in (0, 1e-3)")
        return value

    @field_validator("psd_floor")
    @classmethod
    def validate_psd_floor(cls, value):
        """The PSD floor is a small non-positive number."""
        if value > 0 or value < -1e-6:
            raise ValueError("psd_floor must lie in [-1e-6, 0]")
        return value

    @field_validator("mc_chunk_size", "phi_steps")
    @classmethod
    def validate_positive_count(cls, value, info):
        if value < 1:
            raise ValueError(f"{info.field_name} must be at least 1")
        return value

    @field_validator("default_seed")
    @classmethod
    def validate_seed(cls, value):
        if value < 0 or value >= 2**64:
            raise ValueError("default_seed must be a 64-bit unsigned integer")
        return value


# Default settings instance
settings = SimulationSettings()
