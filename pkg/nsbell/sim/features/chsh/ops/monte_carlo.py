"""Born-rule trial simulation of the CHSH experiment.

Every trial prepares the pure source state, applies a fresh channel
realization when a channel is given, and samples one outcome per party from
{+1, -1, reject}. A two-party pure state psi is held as the matrix M with
psi = sum M[i, j] |i>|j>, so local unitaries act as U_A M U_B^T and the joint
outcome probabilities are ||P_i M Q_j^T||^2.
"""

from typing import List, Optional, Sequence, Tuple

import numpy as np

from log_config import logger
from nsbell.nsbell_config import settings as sim_settings
from nsbell.sim.features.chsh.models.chsh_result import ChshResult
from nsbell.sim.features.chsh.models.chsh_settings import SETTING_LABELS, ChshSettings, Flavor
from nsbell.sim.features.chsh.models.setting_tally import SettingTally
from nsbell.sim.features.chsh.ops.states import singlet_logical, singlet_physical
from nsbell.sim.features.qmat.ops.dense import spectral_projectors
from nsbell.sim.features.shared.sharding import derive_seed, run_shards, split_counts
from nsbell.sim.features.su2rep.ops.haar import haar_batch, u2_matrices
from nsbell.sim.features.su2rep.ops.wigner import tensor_power_batch
from nsbell.sim.features.twirl.models.twirl_spec import BipartiteMode, TwirlSpec
from nsbell.sim.simulation_error import DimensionMismatchError, DomainError, UndefinedResultError


def _check_channel(flavor: Flavor, channel: Optional[TwirlSpec]) -> None:
    if channel is None:
        return
    if channel.bipartite_mode == BipartiteMode.SINGLE_BLOCK or channel.n_qubits != flavor.party_qubits:
        raise DimensionMismatchError(
            f"{flavor.value} needs a two-party channel on blocks of {flavor.party_qubits} qubits",
            operation="chsh_monte_carlo",
            details={"n_qubits": channel.n_qubits, "bipartite_mode": channel.bipartite_mode.value},
        )


def _check_trials(trials_per_setting: int) -> None:
    if trials_per_setting < 1:
        raise DomainError("trials_per_setting must be at least 1", operation="chsh_monte_carlo")


def _source_matrix(flavor: Flavor) -> np.ndarray:
    state = singlet_physical() if flavor == Flavor.PHYSICAL else singlet_logical()
    dim = 2**flavor.party_qubits
    return state.amplitudes.reshape(dim, dim)


def _channel_states(
    source: np.ndarray,
    flavor: Flavor,
    channel: Optional[TwirlSpec],
    rng: np.random.Generator,
    count: int,
) -> np.ndarray:
    """Source matrix after `count` channel realizations, shape (count, dA, dB)."""
    if channel is None:
        return np.broadcast_to(source, (count,) + source.shape)
    n = flavor.party_qubits
    alice = tensor_power_batch(u2_matrices(*haar_batch(rng, count)), n)
    if channel.bipartite_mode == BipartiteMode.SHARED_BLOCK:
        bob = alice
    else:
        bob = tensor_power_batch(u2_matrices(*haar_batch(rng, count)), n)
    return alice @ source @ bob.transpose(0, 2, 1)


def _joint_outcomes(
    states: np.ndarray,
    alice: Sequence[Tuple[float, np.ndarray]],
    bob: Sequence[Tuple[float, np.ndarray]],
) -> Tuple[np.ndarray, np.ndarray]:
    """Joint outcome probabilities, shape (count, K), and the product value of each outcome."""
    probabilities = []
    products = []
    for value_a, p in alice:
        for value_b, q in bob:
            amplitudes = np.einsum("ab,tbc,dc->tad", p, states, q)
            probabilities.append(np.sum(np.abs(amplitudes) ** 2, axis=(1, 2)))
            products.append(value_a * value_b)
    return np.stack(probabilities, axis=1), np.array(products)


def _sample(probabilities: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """One outcome index per row by inverse-CDF sampling."""
    cumulative = np.cumsum(probabilities, axis=1)
    cumulative /= cumulative[:, -1:]
    draws = rng.random(probabilities.shape[0])
    indices = np.sum(draws[:, None] >= cumulative, axis=1)
    return np.minimum(indices, probabilities.shape[1] - 1)


def run_trials(
    flavor: Flavor,
    phi: float,
    trials_per_setting: int,
    channel: Optional[TwirlSpec],
    rng: np.random.Generator,
) -> List[SettingTally]:
    """
    Simulate trials for every setting pair and tally the outcome products.

    Settings are run in SETTING_LABELS order, each in batches of
    settings.mc_chunk_size trials; a trial counts as accepted when neither
    party rejects.
    """
    _check_channel(flavor, channel)
    chsh_settings = ChshSettings.for_angle(phi, flavor)
    source = _source_matrix(flavor)
    tallies = []
    for left, right in chsh_settings.pairs():
        alice, bob = spectral_projectors(left.matrix), spectral_projectors(right.matrix)
        tally = SettingTally()
        done = 0
        while done < trials_per_setting:
            count = min(sim_settings.mc_chunk_size, trials_per_setting - done)
            states = _channel_states(source, flavor, channel, rng, count)
            probabilities, products = _joint_outcomes(states, alice, bob)
            outcomes = products[_sample(probabilities, rng)]
            accepted = outcomes != 0
            tally = tally + SettingTally(
                n_trials=count,
                n_accepted=int(accepted.sum()),
                total=float(outcomes[accepted].sum()),
                total_sq=float(np.sum(outcomes[accepted] ** 2)),
            )
            done += count
        tallies.append(tally)
    return tallies


def result_from_tallies(flavor: Flavor, phi: float, tallies: Sequence[SettingTally]) -> ChshResult:
    """
    Combine per-setting tallies into a CHSH result.

    Raises:
        UndefinedResultError: If some setting has no accepted trial
    """
    for label, tally in zip(SETTING_LABELS, tallies):
        if tally.n_accepted == 0:
            raise UndefinedResultError(
                f"every trial of setting {label} was rejected",
                operation="chsh_monte_carlo",
                details={"trials": tally.n_trials},
            )
    std_errors = tuple(t.std_error for t in tallies)
    n_trials = sum(t.n_trials for t in tallies)
    n_accepted = sum(t.n_accepted for t in tallies)
    return ChshResult.from_correlators(
        flavor,
        phi,
        tuple(t.mean for t in tallies),
        trials_per_setting=tallies[0].n_trials,
        accepted=tuple(t.n_accepted for t in tallies),
        std_errors=std_errors,
        s_std_error=float(np.sqrt(np.sum(np.square(std_errors)))),
        reject_rate=1.0 - n_accepted / n_trials,
    )


def chsh_monte_carlo(
    flavor: Flavor,
    phi: float,
    trials_per_setting: int,
    channel: Optional[TwirlSpec],
    rng: np.random.Generator,
) -> ChshResult:
    """
    Monte Carlo CHSH experiment on the singlet of the given flavor.

    Each correlator is estimated from its own batch of trials, as in a
    laboratory run; correlators are conditioned on both parties accepting.

    Args:
        flavor: Bare photons or the three-photon code
        phi: Measurement angle
        trials_per_setting: Trials for each of the four setting pairs
        channel: Collective noise with a fresh realization per trial, or None
        rng: Random stream

    Returns:
        Estimated correlators, S and standard errors

    Raises:
        DomainError: If trials_per_setting < 1
        DimensionMismatchError: If the channel does not fit the flavor
        UndefinedResultError: If every trial of some setting was rejected
    """
    _check_trials(trials_per_setting)
    tallies = run_trials(flavor, phi, trials_per_setting, channel, rng)
    result = result_from_tallies(flavor, phi, tallies)
    logger.debug(f"chsh_monte_carlo {flavor.value} phi={phi:.6f}: S={result.s_value:.5f} +- {result.s_std_error:.5f}")
    return result


def _trial_shard(payload: Tuple[Flavor, float, int, Optional[TwirlSpec], int]) -> List[SettingTally]:
    flavor, phi, trials, channel, seed = payload
    return run_trials(flavor, phi, trials, channel, np.random.default_rng(seed))


def chsh_monte_carlo_sharded(
    flavor: Flavor,
    phi: float,
    trials_per_setting: int,
    channel: Optional[TwirlSpec],
    seed: int,
    workers: int = 1,
) -> ChshResult:
    """
    Worker-sharded chsh_monte_carlo.

    Shard i runs its share of every setting from seed XOR i; tallies are summed
    in shard order. With one worker the result equals chsh_monte_carlo with
    numpy.random.default_rng(seed).
    """
    _check_trials(trials_per_setting)
    _check_channel(flavor, channel)
    counts = split_counts(trials_per_setting, workers)
    payloads = [(flavor, phi, count, channel, derive_seed(seed, i)) for i, count in enumerate(counts)]
    shard_tallies = run_shards(_trial_shard, payloads, workers)
    combined = shard_tallies[0]
    for tallies in shard_tallies[1:]:
        combined = [left + right for left, right in zip(combined, tallies)]
    return result_from_tallies(flavor, phi, combined)
