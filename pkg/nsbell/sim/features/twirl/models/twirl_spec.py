from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class TwirlMethod(str, Enum):
    MONTE_CARLO = "monte_carlo"
    EXACT = "exact"


class BipartiteMode(str, Enum):
    """How the collective blocks of a register are rotated.

    single_block: one block of n_qubits.
    independent_blocks: two blocks of n_qubits with independent group elements.
    shared_block: both parties' qubits rotated by the same element.
    """
    SINGLE_BLOCK = "single_block"
    INDEPENDENT_BLOCKS = "independent_blocks"
    SHARED_BLOCK = "shared_block"


class TwirlSpec(BaseModel):
    """Parameters of a collective depolarization channel."""
    model_config = ConfigDict(frozen=True)

    n_qubits: int = Field(3, ge=1, le=3, description="Qubits per collective block")
    method: TwirlMethod = TwirlMethod.EXACT
    samples: Optional[int] = Field(None, description="Haar samples for the Monte Carlo method")
    bipartite_mode: BipartiteMode = BipartiteMode.SINGLE_BLOCK

    @model_validator(mode="after")
    def validate_samples(self) -> "TwirlSpec":
        if self.method == TwirlMethod.MONTE_CARLO and (self.samples is None or self.samples < 1):
            raise ValueError("monte_carlo twirl needs samples >= 1")
        return self

    @property
    def total_qubits(self) -> int:
        if self.bipartite_mode == BipartiteMode.SINGLE_BLOCK:
            return self.n_qubits
        return 2 * self.n_qubits

    def blocks(self) -> List[Tuple[int, int]]:
        """(first qubit, size) of every block that receives its own group element."""
        if self.bipartite_mode == BipartiteMode.INDEPENDENT_BLOCKS:
            return [(0, self.n_qubits), (self.n_qubits, self.n_qubits)]
        return [(0, self.total_qubits)]

    def with_samples(self, samples: int) -> "TwirlSpec":
        """Same channel with another sample count, validated like a fresh spec."""
        return TwirlSpec.model_validate({**self.model_dump(), "samples": samples})


class ChannelMode(str, Enum):
    """Channel choice of the CHSH Monte Carlo runs."""
    NONE = "none"
    INDEPENDENT = "independent"
    SHARED = "shared"

    def to_spec(self, n_qubits: int) -> Optional[TwirlSpec]:
        """Two-party Monte Carlo channel on blocks of n_qubits, or None."""
        if self == ChannelMode.NONE:
            return None
        mode = BipartiteMode.INDEPENDENT_BLOCKS if self == ChannelMode.INDEPENDENT else BipartiteMode.SHARED_BLOCK
        return TwirlSpec(n_qubits=n_qubits, method=TwirlMethod.MONTE_CARLO, samples=1, bipartite_mode=mode)
