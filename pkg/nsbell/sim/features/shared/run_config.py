from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, field_validator

from nsbell.nsbell_config import settings


class RunConfig(BaseModel):
    """
    Common configuration of every batch command.

    The seed is always explicit: it is echoed into every output file so no
    result depends on hidden entropy.
    """
    model_config = ConfigDict(frozen=True)

    seed: int = Field(settings.default_seed, description="64-bit unsigned base seed")
    workers: int = Field(1, description="Worker processes for Monte Carlo shards")
    out: Path = Field(..., description="Output CSV path")

    @field_validator("seed")
    @classmethod
    def validate_seed(cls, value: int) -> int:
        if value < 0 or value >= 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        return value

    @field_validator("workers")
    @classmethod
    def validate_workers(cls, value: int) -> int:
        if value < 1:
            raise ValueError("workers must be at least 1")
        return value

    def echo(self) -> dict:
        """JSON-ready view of the full configuration for CSV metadata."""
        return self.model_dump(mode="json")
