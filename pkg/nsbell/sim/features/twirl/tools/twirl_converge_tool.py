from pathlib import Path
from typing import Any, Dict, List

import numpy as np
import typer

from log_config import logger
from nsbell.nsbell_config import settings
from nsbell.sim.features.command_decorator import command
from nsbell.sim.features.qmat.models.quantum_state import DensityOperator
from nsbell.sim.features.qmat.ops.dense import haar_random_state, projector
from nsbell.sim.features.qmat.ops.state_ops import trace_distance
from nsbell.sim.features.shared.command_support import EXIT_USAGE, abort, build_config, execute
from nsbell.sim.features.shared.conversion.param_conversion import parse_int_list
from nsbell.sim.features.shared.sharding import row_seed
from nsbell.sim.features.twirl.models.converge_config import TwirlConvergeConfig
from nsbell.sim.features.twirl.models.twirl_spec import TwirlMethod, TwirlSpec
from nsbell.sim.features.twirl.ops.exact import twirl_exact
from nsbell.sim.features.twirl.ops.monte_carlo import twirl_mc_sharded

CONVERGE_COLUMNS = ["samples", "median_trace_distance", "p05", "p95"]


def _summary(samples: Any, distances: List[float]) -> Dict[str, Any]:
    return {
        "samples": samples,
        "median_trace_distance": float(np.median(distances)),
        "p05": float(np.percentile(distances, 5)),
        "p95": float(np.percentile(distances, 95)),
    }


def converge_rows(config: TwirlConvergeConfig) -> List[Dict[str, Any]]:
    """
    Trace distance between Monte Carlo and exact twirls of random 3-qubit pure states.

    Input r comes from row_seed(seed, r) and is shared by every sample count;
    the k-th sample count twirls it with seed row_seed(row_seed(seed, r), k + 1).
    A final "exact" row compares the exact twirl with itself applied twice.
    """
    exact_spec = TwirlSpec()
    mc_spec = TwirlSpec(method=TwirlMethod.MONTE_CARLO, samples=1)
    inputs, exact = [], []
    for r in range(config.repeats):
        state = haar_random_state(3, np.random.default_rng(row_seed(config.seed, r)))
        rho = DensityOperator(matrix=projector(state))
        inputs.append(rho)
        exact.append(twirl_exact(rho, exact_spec))

    rows = []
    for k, samples in enumerate(config.samples):
        spec = mc_spec.with_samples(samples)
        distances = [
            trace_distance(
                twirl_mc_sharded(rho, spec, row_seed(row_seed(config.seed, r), k + 1), config.workers),
                exact[r],
            )
            for r, rho in enumerate(inputs)
        ]
        rows.append(_summary(samples, distances))
        logger.debug(f"twirl-converge: {samples} samples, median distance {rows[-1]['median_trace_distance']:.4e}")

    rows.append(_summary("exact", [trace_distance(twirl_exact(e, exact_spec), e) for e in exact]))
    return rows


@command("twirl", "twirl-converge", columns=CONVERGE_COLUMNS)
def twirl_converge(
    out: Path = typer.Option(Path("twirl_converge.csv"), "--out", help="Output CSV path."),
    seed: int = typer.Option(settings.default_seed, "--seed", help="64-bit unsigned base seed."),
    workers: int = typer.Option(1, "--workers", help="Worker processes for Monte Carlo shards."),
    samples: str = typer.Option("1,10,100,1000,10000", "--samples", help="Comma-separated sample counts."),
    repeats: int = typer.Option(20, "--repeats", help="Random input states per sample count."),
) -> None:
    """Measure how fast the Monte Carlo twirl approaches the exact twirl.

    For every sample count, twirls the same set of random three-photon pure
    states by Monte Carlo and reports order statistics of the trace distance to
    the exact result. The last row is an exact-versus-exact control.

    Columns:
        - samples: Haar samples per estimate, or "exact" for the control row
        - median_trace_distance: Median distance over the input states
        - p05: 5th percentile of the distance
        - p95: 95th percentile of the distance
    """
    logger.debug(
        f"Command 'twirl-converge' ENTERED with raw args: out={out}, seed={seed}, "
        f"workers={workers}, samples={samples}, repeats={repeats}"
    )
    sample_counts, error = parse_int_list(samples, "samples", example="1,10,100")
    if error:
        abort(error, EXIT_USAGE)
    config = build_config(
        TwirlConvergeConfig, out=out, seed=seed, workers=workers, samples=sample_counts, repeats=repeats
    )
    execute("twirl-converge", config, CONVERGE_COLUMNS, lambda: converge_rows(config))
