import math

from pydantic import BaseModel, ConfigDict, Field


class SettingTally(BaseModel):
    """Running counts for one setting pair of a CHSH trial run.

    `total` and `total_sq` sum the outcome products of accepted trials only.
    """
    model_config = ConfigDict(frozen=True)

    n_trials: int = Field(0, ge=0)
    n_accepted: int = Field(0, ge=0)
    total: float = 0.0
    total_sq: float = 0.0

    def __add__(self, other: "SettingTally") -> "SettingTally":
        return SettingTally(
            n_trials=self.n_trials + other.n_trials,
            n_accepted=self.n_accepted + other.n_accepted,
            total=self.total + other.total,
            total_sq=self.total_sq + other.total_sq,
        )

    @property
    def mean(self) -> float:
        return self.total / self.n_accepted

    @property
    def std_error(self) -> float:
        """Standard error of the mean with the unbiased variance."""
        n = self.n_accepted
        if n < 2:
            # one +-1 product bounds the spread by 1
            return 1.0
        variance = max(0.0, (self.total_sq - n * self.mean**2) / (n - 1))
        return math.sqrt(variance / n)
