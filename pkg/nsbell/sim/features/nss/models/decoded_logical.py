from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from nsbell.sim.features.qmat.models.quantum_state import DensityOperator


class DecodedLogical(BaseModel):
    """Outcome of decoding a three-photon state.

    `logical_state` is None when the state lies entirely in the spin-3/2
    (reject) sector.
    """
    model_config = ConfigDict(frozen=True)

    logical_state: Optional[DensityOperator] = None
    reject_probability: float = Field(..., ge=-1e-12, le=1.0 + 1e-12)

    @property
    def defined(self) -> bool:
        return self.logical_state is not None
