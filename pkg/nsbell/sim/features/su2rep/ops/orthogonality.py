import numpy as np

from log_config import logger
from nsbell.nsbell_config import settings
from nsbell.sim.features.su2rep.models.orthogonality_estimate import OrthogonalityEstimate
from nsbell.sim.features.su2rep.models.wigner_matrix import SUPPORTED_SPINS
from nsbell.sim.features.su2rep.ops.haar import haar_batch, su2_matrices
from nsbell.sim.features.su2rep.ops.wigner import wigner_d_batch
from nsbell.sim.simulation_error import DomainError


def _index(j: float, m: float, label: str) -> int:
    """Row index j - m, checking |m| <= j and that j - m is an integer."""
    if j not in SUPPORTED_SPINS:
        raise DomainError(f"unsupported spin j={j}", operation="check_orthogonality")
    offset = j - m
    if abs(m) > j or abs(offset - round(offset)) > 1e-12:
        raise DomainError(f"{label}={m} is not a valid projection for j={j}", operation="check_orthogonality")
    return int(round(offset))


def expected_overlap(j: float, j_prime: float, m: float, n: float, m_prime: float, n_prime: float) -> float:
    """delta_jj' delta_mm' delta_nn' / (2j+1)."""
    if j == j_prime and m == m_prime and n == n_prime:
        return 1.0 / (2 * j + 1)
    return 0.0


def check_orthogonality(
    j: float,
    j_prime: float,
    m: float,
    n: float,
    m_prime: float,
    n_prime: float,
    samples: int,
    rng: np.random.Generator,
) -> OrthogonalityEstimate:
    """
    Monte Carlo estimate of the SU(2) orthogonality integral.

    Averages conj(D^j_{mn}(g)) D^{j'}_{m'n'}(g) over Haar-random SU(2) elements;
    the result converges to delta_jj' delta_mm' delta_nn' / (2j+1).

    Args:
        j, j_prime: Spins in {1/2, 1, 3/2}
        m, n, m_prime, n_prime: Projections with |m| <= j etc.
        samples: Number of group elements
        rng: Random stream

    Returns:
        Estimate with its standard error and the exact value

    Raises:
        DomainError: If a spin or index is invalid
    """
    rows = (_index(j, m, "m"), _index(j, n, "n"), _index(j_prime, m_prime, "m'"), _index(j_prime, n_prime, "n'"))
    if samples < 2:
        raise DomainError("at least two samples are needed for a standard error", operation="check_orthogonality")

    total = 0j
    total_sq = 0.0
    done = 0
    while done < samples:
        count = min(settings.mc_chunk_size * 8, samples - done)
        _, quaternions = haar_batch(rng, count)
        fundamentals = su2_matrices(quaternions)
        left = wigner_d_batch(j, fundamentals)[:, rows[0], rows[1]]
        right = wigner_d_batch(j_prime, fundamentals)[:, rows[2], rows[3]]
        values = left.conj() * right
        total += values.sum()
        total_sq += float(np.sum(np.abs(values) ** 2))
        done += count

    mean = total / samples
    variance = (total_sq - samples * abs(mean) ** 2) / (samples - 1)
    std_error = float(np.sqrt(max(variance, 0.0) / samples))
    expected = expected_overlap(j, j_prime, m, n, m_prime, n_prime)
    logger.debug(f"orthogonality j={j} j'={j_prime} ({m},{n},{m_prime},{n_prime}): {mean:.5f} +- {std_error:.5f}")
    return OrthogonalityEstimate(
        j=j, j_prime=j_prime, m=m, n=n, m_prime=m_prime, n_prime=n_prime,
        samples=samples, estimate=complex(mean), std_error=std_error, expected=expected,
    )
