"""Deterministic worker sharding for Monte Carlo estimators.

Shard `i` of a run with base seed `s` draws from `numpy.random.default_rng(s ^ i)`.
Results are reproducible for a fixed (seed, workers) pair; changing the worker
count changes the streams and therefore the estimate.
"""

from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, List, Sequence

from log_config import logger

SEED_MASK = 2**64 - 1
ROW_STRIDE = 1_000_003


def derive_seed(base_seed: int, index: int) -> int:
    """Seed of shard `index`: base seed XOR shard index."""
    return (base_seed ^ index) & SEED_MASK


def row_seed(base_seed: int, row: int) -> int:
    """Base seed of row `row` in a multi-row command."""
    return (base_seed + row * ROW_STRIDE) & SEED_MASK


def split_counts(total: int, workers: int) -> List[int]:
    """
    Split `total` draws across `workers` shards, remainder to the last shard.

    Shards that would receive zero draws are dropped.
    """
    if total < 1:
        raise ValueError("total must be at least 1")
    if workers < 1:
        raise ValueError("workers must be at least 1")
    workers = min(workers, total)
    base, remainder = divmod(total, workers)
    counts = [base] * workers
    counts[-1] += remainder
    return counts


def run_shards(fn: Callable[[Any], Any], payloads: Sequence[Any], workers: int) -> List[Any]:
    """
    Evaluate `fn` on every payload, in a process pool when `workers > 1`.

    Results come back in payload order, so combining them is deterministic.
    `fn` must be a module-level function.
    """
    if workers <= 1 or len(payloads) <= 1:
        return [fn(payload) for payload in payloads]
    logger.debug(f"Running {len(payloads)} shards on {workers} worker processes")
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, payloads))
