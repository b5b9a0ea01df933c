from pathlib import Path
from typing import Any, Dict, List, Tuple

import numpy as np
import typer

from log_config import logger
from nsbell.nsbell_config import settings
from nsbell.sim.features.command_decorator import command
from nsbell.sim.features.shared.command_support import build_config, execute
from nsbell.sim.features.shared.sharding import row_seed, run_shards
from nsbell.sim.features.su2rep.models.orthogonality_config import OrthogonalityConfig
from nsbell.sim.features.su2rep.models.orthogonality_estimate import OrthogonalityEstimate
from nsbell.sim.features.su2rep.ops.orthogonality import check_orthogonality

ORTHOGONALITY_COLUMNS = [
    "j",
    "j_prime",
    "m",
    "n",
    "m_prime",
    "n_prime",
    "samples",
    "estimate_re",
    "estimate_im",
    "std_error",
    "expected",
    "within_4sigma",
]

# (j, j', m, n, m', n'): diagonal entries, same-spin mismatches and mixed spins
INDEX_TUPLES: List[Tuple[float, float, float, float, float, float]] = [
    (0.5, 0.5, 0.5, 0.5, 0.5, 0.5),
    (0.5, 0.5, 0.5, -0.5, 0.5, -0.5),
    (0.5, 0.5, 0.5, 0.5, -0.5, 0.5),
    (1.0, 1.0, 0.0, 0.0, 0.0, 0.0),
    (1.0, 1.0, 1.0, -1.0, 1.0, -1.0),
    (1.0, 1.0, 1.0, 0.0, 0.0, 1.0),
    (1.5, 1.5, 1.5, 0.5, 1.5, 0.5),
    (1.5, 1.5, -0.5, -0.5, -0.5, -0.5),
    (1.5, 1.5, 0.5, 0.5, -0.5, -0.5),
    (0.5, 1.0, 0.5, 0.5, 0.0, 0.0),
    (0.5, 1.5, 0.5, 0.5, 0.5, 0.5),
    (1.0, 1.5, 0.0, 0.0, 0.5, 0.5),
]


def _estimate_row(payload: Tuple[Tuple[float, ...], int, int]) -> OrthogonalityEstimate:
    indices, samples, seed = payload
    return check_orthogonality(*indices, samples=samples, rng=np.random.default_rng(seed))


def orthogonality_rows(config: OrthogonalityConfig) -> List[Dict[str, Any]]:
    """One row per index tuple; row k draws from row_seed(seed, k), so rows do not depend on the worker count."""
    payloads = [(indices, config.samples, row_seed(config.seed, k)) for k, indices in enumerate(INDEX_TUPLES)]
    rows = []
    for estimate in run_shards(_estimate_row, payloads, config.workers):
        rows.append({
            "j": estimate.j,
            "j_prime": estimate.j_prime,
            "m": estimate.m,
            "n": estimate.n,
            "m_prime": estimate.m_prime,
            "n_prime": estimate.n_prime,
            "samples": estimate.samples,
            "estimate_re": estimate.estimate.real,
            "estimate_im": estimate.estimate.imag,
            "std_error": estimate.std_error,
            "expected": estimate.expected,
            "within_4sigma": estimate.deviation_in_sigma <= 4.0,
        })
    failed = sum(1 for row in rows if not row["within_4sigma"])
    if failed:
        logger.warning(f"{failed} orthogonality estimates fall outside 4 standard errors")
    return rows


@command("su2rep", "orthogonality", columns=ORTHOGONALITY_COLUMNS)
def orthogonality(
    out: Path = typer.Option(Path("orthogonality.csv"), "--out", help="Output CSV path."),
    seed: int = typer.Option(settings.default_seed, "--seed", help="64-bit unsigned base seed."),
    workers: int = typer.Option(1, "--workers", help="Worker processes; rows are distributed across them."),
    samples: int = typer.Option(100_000, "--samples", help="Haar samples per index tuple."),
) -> None:
    """Check the orthogonality relations of SU(2) representation matrices.

    Estimates the Haar average of conj(D^j_mn) D^j'_m'n' for a fixed set of
    index tuples with spins 1/2, 1 and 3/2, and compares each estimate with
    delta_jj' delta_mm' delta_nn' / (2j+1).

    Columns:
        - j: Spin of the conjugated factor
        - j_prime: Spin of the second factor
        - m: Row index of the conjugated factor
        - n: Column index of the conjugated factor
        - m_prime: Row index of the second factor
        - n_prime: Column index of the second factor
        - samples: Haar samples used
        - estimate_re: Real part of the estimate
        - estimate_im: Imaginary part of the estimate
        - std_error: Standard error of the estimate
        - expected: Exact value of the integral
        - within_4sigma: Whether the estimate lies within 4 standard errors of the exact value
    """
    logger.debug(f"Command 'orthogonality' ENTERED with raw args: out={out}, seed={seed}, samples={samples}")
    config = build_config(OrthogonalityConfig, out=out, seed=seed, workers=workers, samples=samples)
    execute("orthogonality", config, ORTHOGONALITY_COLUMNS, lambda: orthogonality_rows(config))
