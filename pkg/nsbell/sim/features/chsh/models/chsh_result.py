import math
from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from nsbell.sim.features.chsh.models.chsh_settings import Flavor

_COMBINATION_TOL = 1e-9


class ChshResult(BaseModel):
    """
    CHSH correlators and their combination.

    s_signed = E_AB + E_A'B + E_AB' - E_A'B' and s_value = |s_signed|. Exact
    evaluations report zero trials and zero standard errors. For the logical
    flavor the correlators are conditioned on both parties accepting.
    """
    model_config = ConfigDict(frozen=True)

    flavor: Flavor
    phi: float
    s_value: float
    s_signed: float
    e_ab: float
    e_a_prime_b: float
    e_a_b_prime: float
    e_a_prime_b_prime: float
    trials_per_setting: int = Field(0, ge=0)
    accepted: Tuple[int, int, int, int] = (0, 0, 0, 0)
    std_errors: Tuple[float, float, float, float] = (0.0, 0.0, 0.0, 0.0)
    s_std_error: float = Field(0.0, ge=0.0)
    reject_rate: float = Field(0.0, ge=-1e-12, le=1.0 + 1e-12)

    @model_validator(mode="after")
    def validate_combination(self) -> "ChshResult":
        combined = self.e_ab + self.e_a_prime_b + self.e_a_b_prime - self.e_a_prime_b_prime
        if abs(combined - self.s_signed) > _COMBINATION_TOL:
            raise ValueError(f"s_signed {self.s_signed} does not match the correlator combination {combined}")
        if abs(abs(self.s_signed) - self.s_value) > _COMBINATION_TOL:
            raise ValueError("s_value must be |s_signed|")
        return self

    @classmethod
    def from_correlators(
        cls,
        flavor: Flavor,
        phi: float,
        correlators: Tuple[float, float, float, float],
        **kwargs,
    ) -> "ChshResult":
        e_ab, e_apb, e_abp, e_apbp = (float(c) for c in correlators)
        s_signed = e_ab + e_apb + e_abp - e_apbp
        return cls(
            flavor=flavor,
            phi=phi,
            s_value=abs(s_signed),
            s_signed=s_signed,
            e_ab=e_ab,
            e_a_prime_b=e_apb,
            e_a_b_prime=e_abp,
            e_a_prime_b_prime=e_apbp,
            **kwargs,
        )

    @property
    def correlators(self) -> Tuple[float, float, float, float]:
        return (self.e_ab, self.e_a_prime_b, self.e_a_b_prime, self.e_a_prime_b_prime)

    @property
    def violates_lhv_bound(self) -> bool:
        return self.s_value > 2.0

    def within_sigma(self, expected: float, sigmas: float = 4.0) -> bool:
        """True when |s_value - expected| is within `sigmas` standard errors."""
        if self.s_std_error == 0.0:
            return math.isclose(self.s_value, expected, abs_tol=1e-12)
        return abs(self.s_value - expected) <= sigmas * self.s_std_error
