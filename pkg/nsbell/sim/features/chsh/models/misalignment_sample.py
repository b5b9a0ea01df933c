from pydantic import BaseModel, ConfigDict

from nsbell.sim.features.su2rep.models.group_element import GroupElementU2


class MisalignmentSample(BaseModel):
    """CHSH values of both protocols when Alice's and Bob's frames differ by fixed rotations."""
    model_config = ConfigDict(frozen=True)

    index: int
    g_alice: GroupElementU2
    g_bob: GroupElementU2
    s_physical: float
    s_logical: float

    @property
    def relative(self) -> GroupElementU2:
        """g_A^-1 g_B, the only part of the misalignment a rotation-invariant state can see."""
        return self.g_alice.inverse() * self.g_bob

    @property
    def physical_violates(self) -> bool:
        return self.s_physical > 2.0
