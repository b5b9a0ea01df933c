from typing import List

from pydantic import Field, field_validator

from nsbell.sim.features.shared.run_config import RunConfig


class TwirlConvergeConfig(RunConfig):
    """Options of the `twirl-converge` command."""

    samples: List[int] = Field(default_factory=lambda: [1, 10, 100, 1000, 10000], description="Sample counts")
    repeats: int = Field(20, ge=1, description="Random input states per sample count")

    @field_validator("samples")
    @classmethod
    def validate_samples(cls, value: List[int]) -> List[int]:
        if not value or any(v < 1 for v in value):
            raise ValueError("sample counts must be positive")
        return value
