import math
from enum import Enum
from typing import List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from nsbell.sim.features.nss.ops.logical_ops import PauliAxis, logical_pauli
from nsbell.sim.features.qmat.models.quantum_state import Observable
from nsbell.sim.features.qmat.ops.dense import SIGMA_X, SIGMA_Z

# Setting pairs in the order they enter S = E(A,B) + E(A',B) + E(A,B') - E(A',B').
SETTING_LABELS = ("AB", "A'B", "AB'", "A'B'")
SETTING_SIGNS = (1.0, 1.0, 1.0, -1.0)


class Flavor(str, Enum):
    PHYSICAL = "physical_2qubit"
    LOGICAL = "logical_6photon"

    @property
    def party_qubits(self) -> int:
        return 1 if self == Flavor.PHYSICAL else 3


class ChshSettings(BaseModel):
    """The four local observables of a CHSH test at angle phi.

    A = B = sigma_z, A' = cos(phi) sigma_z + sin(phi) sigma_x and
    B' = cos(phi) sigma_z - sin(phi) sigma_x, on single photons (physical) or
    as logical operators on each party's three-photon block.
    """
    model_config = ConfigDict(frozen=True)

    phi: float
    flavor: Flavor
    a: Observable
    a_prime: Observable
    b: Observable
    b_prime: Observable

    @model_validator(mode="after")
    def validate_party_dimensions(self) -> "ChshSettings":
        expected = 2**self.flavor.party_qubits
        for name in ("a", "a_prime", "b", "b_prime"):
            if getattr(self, name).dim != expected:
                raise ValueError(f"{name} must act on {expected} dimensions for {self.flavor.value}")
        return self

    @classmethod
    def for_angle(cls, phi: float, flavor: Flavor) -> "ChshSettings":
        c, s = math.cos(phi), math.sin(phi)
        flavor = Flavor(flavor)
        if flavor == Flavor.PHYSICAL:
            z, tilted, counter = SIGMA_Z, c * SIGMA_Z + s * SIGMA_X, c * SIGMA_Z - s * SIGMA_X
        else:
            z = logical_pauli(PauliAxis.Z).full_matrix
            tilted = logical_pauli(PauliAxis.GENERAL, c, s).full_matrix
            counter = logical_pauli(PauliAxis.GENERAL, c, -s).full_matrix
        return cls(
            phi=phi,
            flavor=flavor,
            a=Observable(matrix=z),
            a_prime=Observable(matrix=tilted),
            b=Observable(matrix=z),
            b_prime=Observable(matrix=counter),
        )

    def pairs(self) -> List[Tuple[Observable, Observable]]:
        """(Alice, Bob) observables in SETTING_LABELS order."""
        return [(self.a, self.b), (self.a_prime, self.b), (self.a, self.b_prime), (self.a_prime, self.b_prime)]

    def accept_projector(self) -> np.ndarray:
        """Projector onto the support of one party's observables (identity for bare photons)."""
        matrix = self.a.matrix
        return np.array(matrix @ matrix, dtype=complex)
