import math
from pathlib import Path
from typing import Any, Dict, List

import typer

from log_config import logger
from nsbell.nsbell_config import settings
from nsbell.sim.features.chsh.models.chsh_settings import ChshSettings, Flavor
from nsbell.sim.features.chsh.ops.exact import chsh_exact
from nsbell.sim.features.chsh.ops.states import singlet_logical, singlet_physical
from nsbell.sim.features.command_decorator import command
from nsbell.sim.features.shared.command_support import EXIT_USAGE, abort, build_config, execute
from nsbell.sim.features.shared.conversion.param_conversion import parse_float_list
from nsbell.sim.features.spacetime.models.birefringence_params import BirefringenceParams
from nsbell.sim.features.spacetime.models.run_configs import BirefConfig
from nsbell.sim.features.spacetime.ops.birefringence import birefringence_phase, birefringent_channel
from nsbell.sim.features.twirl.ops.rotation import fixed_rotation_blocks

BIREF_COLUMNS = [
    "k2",
    "m_tilde",
    "wavelength",
    "radius",
    "mu",
    "delta_phi",
    "s_physical_after",
    "s_logical_after",
]

CHSH_ANGLE = math.pi / 3


def biref_rows(config: BirefConfig) -> List[Dict[str, Any]]:
    """Phase and CHSH values at pi/3 with the birefringent element on Alice's side, one row per mu."""
    physical, logical = singlet_physical().density(), singlet_logical().density()
    physical_settings = ChshSettings.for_angle(CHSH_ANGLE, Flavor.PHYSICAL)
    logical_settings = ChshSettings.for_angle(CHSH_ANGLE, Flavor.LOGICAL)

    rows = []
    for mu in config.mu:
        params = BirefringenceParams(
            k2=config.k2, m_tilde=config.m_tilde, wavelength=config.wavelength, radius=config.radius, mu=mu
        )
        delta_phi = birefringence_phase(params)
        g = birefringent_channel(delta_phi)
        rows.append({
            "k2": params.k2,
            "m_tilde": params.m_tilde,
            "wavelength": params.wavelength,
            "radius": params.radius,
            "mu": mu,
            "delta_phi": delta_phi,
            "s_physical_after": chsh_exact(fixed_rotation_blocks(physical, [g, None], 1), physical_settings).s_value,
            "s_logical_after": chsh_exact(fixed_rotation_blocks(logical, [g, None], 3), logical_settings).s_value,
        })
        logger.debug(f"biref mu={mu}: delta_phi={delta_phi:.6e}")
    return rows


@command("spacetime", "biref", columns=BIREF_COLUMNS)
def biref(
    out: Path = typer.Option(Path("biref.csv"), "--out", help="Output CSV path."),
    seed: int = typer.Option(settings.default_seed, "--seed", help="64-bit unsigned base seed (recorded only)."),
    workers: int = typer.Option(1, "--workers", help="Worker processes (unused, the command is deterministic)."),
    k2: float = typer.Option(1.0, "--k2", help="Coupling constant k^2."),
    m_tilde: float = typer.Option(1.0, "--m-tilde", help="Torsion mass, inverse length."),
    wavelength: float = typer.Option(1.0, "--wavelength", help="Photon wavelength."),
    radius: float = typer.Option(1.0, "--radius", help="Stellar radius."),
    mu: str = typer.Option("0.1,0.25,0.5,0.75,1.0", "--mu", help="Comma-separated line-of-sight cosines in (0, 1]."),
) -> None:
    """Tabulate the gravity-induced birefringence phase and its effect on CHSH.

    For every line-of-sight cosine, evaluates the phase between the two
    polarization components and applies the corresponding element to Alice's
    side: to the single photon of the bare singlet and collectively to the three
    photons of the encoded singlet. Both CHSH values are taken at pi/3.

    Columns:
        - k2: Coupling constant
        - m_tilde: Torsion mass
        - wavelength: Photon wavelength
        - radius: Stellar radius
        - mu: Cosine of the line-of-sight angle
        - delta_phi: Birefringence phase, zero at mu = 1
        - s_physical_after: Exact S of the bare singlet after the phase
        - s_logical_after: Exact S of the encoded singlet after the phase
    """
    logger.debug(
        f"Command 'biref' ENTERED with raw args: out={out}, k2={k2}, m_tilde={m_tilde}, "
        f"wavelength={wavelength}, radius={radius}, mu={mu}"
    )
    mu_values, error = parse_float_list(mu, "mu", example="0.25,0.5,1")
    if error:
        abort(error, EXIT_USAGE)
    config = build_config(
        BirefConfig, out=out, seed=seed, workers=workers,
        k2=k2, m_tilde=m_tilde, wavelength=wavelength, radius=radius, mu=mu_values,
    )
    execute("biref", config, BIREF_COLUMNS, lambda: biref_rows(config))
