import math

from pydantic import Field

from nsbell.nsbell_config import settings
from nsbell.sim.features.shared.run_config import RunConfig
from nsbell.sim.features.twirl.models.twirl_spec import ChannelMode


class ChshScanConfig(RunConfig):
    """Options of the `chsh` command."""

    phi_steps: int = Field(settings.phi_steps, ge=2, description="Points of the phi grid on [0, pi/2]")
    trials: int = Field(2000, ge=1, description="Monte Carlo trials per setting pair and grid point")
    channel: ChannelMode = Field(ChannelMode.INDEPENDENT, description="Channel of the Monte Carlo column")


class MisalignConfig(RunConfig):
    """Options of the `misalign` command."""

    phi: float = Field(math.pi / 3, ge=0.0, le=math.pi / 2, description="Measurement angle")
    pairs: int = Field(1000, ge=1, description="Random (g_A, g_B) misalignment pairs")
