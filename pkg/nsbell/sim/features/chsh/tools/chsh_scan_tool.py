import math
from pathlib import Path
from typing import Any, Dict, List

import numpy as np
import typer

from log_config import logger
from nsbell.nsbell_config import settings
from nsbell.sim.features.chsh.models.chsh_settings import ChshSettings, Flavor
from nsbell.sim.features.chsh.models.run_configs import ChshScanConfig
from nsbell.sim.features.chsh.ops.exact import chsh_exact, chsh_formula
from nsbell.sim.features.chsh.ops.monte_carlo import chsh_monte_carlo_sharded
from nsbell.sim.features.chsh.ops.states import singlet_logical, singlet_physical
from nsbell.sim.features.command_decorator import command
from nsbell.sim.features.shared.command_support import build_config, execute
from nsbell.sim.features.shared.sharding import row_seed
from nsbell.sim.features.twirl.models.twirl_spec import BipartiteMode, ChannelMode, TwirlSpec
from nsbell.sim.features.twirl.ops.exact import twirl_exact

CHSH_COLUMNS = [
    "phi",
    "s_formula",
    "s_physical_exact",
    "s_physical_twirled",
    "s_logical_twirled",
    "s_logical_mc",
    "mc_stderr",
    "reject_rate",
]


def chsh_rows(config: ChshScanConfig) -> List[Dict[str, Any]]:
    """One row per grid angle; grid point k draws its Monte Carlo stream from row_seed(seed, k)."""
    physical = singlet_physical().density()
    physical_twirled = twirl_exact(
        physical, TwirlSpec(n_qubits=1, bipartite_mode=BipartiteMode.INDEPENDENT_BLOCKS)
    )
    logical_twirled = twirl_exact(
        singlet_logical().density(), TwirlSpec(n_qubits=3, bipartite_mode=BipartiteMode.INDEPENDENT_BLOCKS)
    )
    channel = config.channel.to_spec(Flavor.LOGICAL.party_qubits)

    rows = []
    for index, phi in enumerate(np.linspace(0.0, math.pi / 2, config.phi_steps)):
        phi = float(phi)
        physical_settings = ChshSettings.for_angle(phi, Flavor.PHYSICAL)
        logical_settings = ChshSettings.for_angle(phi, Flavor.LOGICAL)
        mc = chsh_monte_carlo_sharded(
            Flavor.LOGICAL, phi, config.trials, channel, row_seed(config.seed, index), config.workers
        )
        rows.append({
            "phi": phi,
            "s_formula": chsh_formula(phi),
            "s_physical_exact": chsh_exact(physical, physical_settings).s_value,
            "s_physical_twirled": chsh_exact(physical_twirled, physical_settings).s_value,
            "s_logical_twirled": chsh_exact(logical_twirled, logical_settings).s_value,
            "s_logical_mc": mc.s_value,
            "mc_stderr": mc.s_std_error,
            "reject_rate": mc.reject_rate,
        })
        logger.debug(f"chsh row {index}: phi={phi:.6f} S_mc={mc.s_value:.4f}")
    return rows


@command("chsh", "chsh", columns=CHSH_COLUMNS)
def chsh_scan(
    out: Path = typer.Option(Path("chsh.csv"), "--out", help="Output CSV path."),
    seed: int = typer.Option(settings.default_seed, "--seed", help="64-bit unsigned base seed."),
    workers: int = typer.Option(1, "--workers", help="Worker processes for Monte Carlo shards."),
    phi_steps: int = typer.Option(settings.phi_steps, "--phi-steps", help="Grid points on [0, pi/2]."),
    trials: int = typer.Option(2000, "--trials", help="Monte Carlo trials per setting pair and angle."),
    channel: ChannelMode = typer.Option(
        ChannelMode.INDEPENDENT, "--channel", help="Collective noise of the Monte Carlo column."
    ),
) -> None:
    """Scan the CHSH value of bare and encoded singlets over the measurement angle.

    Evaluates the closed form, the exact bare and encoded values with and without
    independent collective depolarization, and a Monte Carlo run of the encoded
    protocol through the selected channel, at every point of a uniform grid on
    [0, pi/2].

    Columns:
        - phi: Measurement angle in radians
        - s_formula: |1 + 2 cos(phi) - cos(2 phi)|
        - s_physical_exact: Exact S of the bare two-photon singlet
        - s_physical_twirled: Exact S of the bare singlet after independent twirls
        - s_logical_twirled: Exact S of the encoded singlet after independent twirls
        - s_logical_mc: Monte Carlo S of the encoded singlet through --channel
        - mc_stderr: Standard error of s_logical_mc
        - reject_rate: Fraction of Monte Carlo trials with a reject outcome
    """
    logger.debug(
        f"Command 'chsh' ENTERED with raw args: out={out}, seed={seed}, workers={workers}, "
        f"phi_steps={phi_steps}, trials={trials}, channel={channel}"
    )
    config = build_config(
        ChshScanConfig, out=out, seed=seed, workers=workers, phi_steps=phi_steps, trials=trials, channel=channel
    )
    execute("chsh", config, CHSH_COLUMNS, lambda: chsh_rows(config))
