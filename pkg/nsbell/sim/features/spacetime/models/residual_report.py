from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field


class ResidualReport(BaseModel):
    """Max-norm residuals of the three tetrad identities at one point.

    frame: e^mu_a e^nu_b g_{mu nu} - eta_ab
    inverse_left: e^a_mu e^nu_a - delta^nu_mu
    inverse_right: e^a_mu e^mu_b - delta^a_b
    """
    model_config = ConfigDict(frozen=True)

    point: Tuple[float, float, float, float]
    frame: float = Field(..., ge=0)
    inverse_left: float = Field(..., ge=0)
    inverse_right: float = Field(..., ge=0)
    tol: float = Field(..., gt=0)

    @property
    def max_residual(self) -> float:
        return max(self.frame, self.inverse_left, self.inverse_right)

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tol
