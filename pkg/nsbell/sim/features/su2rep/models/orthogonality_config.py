from pydantic import Field

from nsbell.sim.features.shared.run_config import RunConfig


class OrthogonalityConfig(RunConfig):
    """Options of the `orthogonality` command."""

    samples: int = Field(100_000, ge=2, description="Haar samples per index tuple")
