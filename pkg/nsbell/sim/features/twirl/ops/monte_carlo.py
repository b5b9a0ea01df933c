from typing import Tuple

import numpy as np

from log_config import logger
from nsbell.nsbell_config import settings
from nsbell.sim.features.qmat.models.quantum_state import DensityOperator
from nsbell.sim.features.qmat.ops.state_ops import density_from_array
from nsbell.sim.features.shared.sharding import derive_seed, run_shards, split_counts
from nsbell.sim.features.su2rep.ops.haar import haar_batch, u2_matrices
from nsbell.sim.features.su2rep.ops.wigner import tensor_power_batch
from nsbell.sim.features.twirl.models.twirl_spec import BipartiteMode, TwirlMethod, TwirlSpec
from nsbell.sim.simulation_error import DimensionMismatchError, SimulationError

# Upper bound on complex entries held by one batch of register unitaries.
_BATCH_ENTRIES = 2**20


def _check(rho: DensityOperator, spec: TwirlSpec, operation: str) -> None:
    if spec.method != TwirlMethod.MONTE_CARLO:
        raise SimulationError("twirl spec does not select the monte_carlo method", operation=operation)
    if rho.n_qubits != spec.total_qubits:
        raise DimensionMismatchError(
            f"state has {rho.n_qubits} qubits, twirl expects {spec.total_qubits}",
            operation=operation,
            details={"bipartite_mode": spec.bipartite_mode.value},
        )


def register_unitaries(spec: TwirlSpec, rng: np.random.Generator, count: int) -> np.ndarray:
    """
    Draw `count` channel realizations as unitaries on the whole register.

    Independent blocks draw Alice's elements before Bob's for each batch.
    """
    fundamentals = u2_matrices(*haar_batch(rng, count))
    if spec.bipartite_mode != BipartiteMode.INDEPENDENT_BLOCKS:
        return tensor_power_batch(fundamentals, spec.total_qubits)
    first = tensor_power_batch(fundamentals, spec.n_qubits)
    second = tensor_power_batch(u2_matrices(*haar_batch(rng, count)), spec.n_qubits)
    dim = first.shape[1] ** 2
    return np.einsum("tij,tkl->tikjl", first, second).reshape(count, dim, dim)


def _conjugation_sum(matrix: np.ndarray, spec: TwirlSpec, samples: int, rng: np.random.Generator) -> np.ndarray:
    """Sum of W rho W^dagger over `samples` realizations, drawn in fixed-size batches."""
    dim = matrix.shape[0]
    batch = max(1, min(settings.mc_chunk_size, _BATCH_ENTRIES // (dim * dim)))
    total = np.zeros_like(matrix, dtype=complex)
    done = 0
    while done < samples:
        count = min(batch, samples - done)
        unitaries = register_unitaries(spec, rng, count)
        rotated = unitaries @ matrix
        total += np.tensordot(rotated, unitaries.conj(), axes=([0, 2], [0, 2]))
        done += count
    return total


def twirl_mc(rho: DensityOperator, spec: TwirlSpec, rng: np.random.Generator) -> DensityOperator:
    """
    Monte Carlo estimate of the collective twirl.

    Averages the conjugation over spec.samples Haar-random channel realizations
    and renormalizes the trace of the average.

    Args:
        rho: State on spec.total_qubits qubits
        spec: Channel parameters with method monte_carlo
        rng: Random stream; the result is a pure function of its state

    Returns:
        The estimated twirled state

    Raises:
        DimensionMismatchError: If rho does not match `spec`
        SimulationError: If `spec` selects the exact method
    """
    _check(rho, spec, "twirl_mc")
    total = _conjugation_sum(rho.matrix, spec, spec.samples, rng)
    logger.debug(f"twirl_mc: {spec.samples} samples, mode {spec.bipartite_mode.value}")
    return density_from_array(total / spec.samples, "twirl_mc")


def _twirl_shard(payload: Tuple[np.ndarray, TwirlSpec, int, int]) -> np.ndarray:
    matrix, spec, samples, seed = payload
    return _conjugation_sum(matrix, spec, samples, np.random.default_rng(seed))


def twirl_mc_sharded(rho: DensityOperator, spec: TwirlSpec, seed: int, workers: int = 1) -> DensityOperator:
    """
    Worker-sharded twirl_mc.

    Shard i draws from seed XOR i; shard sums are added in shard order, so the
    estimate is reproducible for a fixed (seed, workers) pair. With one worker
    it equals twirl_mc with numpy.random.default_rng(seed).
    """
    _check(rho, spec, "twirl_mc_sharded")
    counts = split_counts(spec.samples, workers)
    payloads = [(np.array(rho.matrix), spec, count, derive_seed(seed, i)) for i, count in enumerate(counts)]
    sums = run_shards(_twirl_shard, payloads, workers)
    total = np.zeros_like(sums[0])
    for partial in sums:
        total += partial
    logger.debug(f"twirl_mc_sharded: {spec.samples} samples over {len(counts)} shards")
    return density_from_array(total / spec.samples, "twirl_mc_sharded")
