import itertools
import math
from typing import List, Tuple

import numpy as np

from log_config import logger
from nsbell.nsbell_config import settings as sim_settings
from nsbell.sim.features.chsh.models.chsh_result import ChshResult
from nsbell.sim.features.chsh.models.chsh_settings import SETTING_SIGNS, ChshSettings
from nsbell.sim.features.qmat.models.quantum_state import DensityOperator
from nsbell.sim.simulation_error import DimensionMismatchError, SimulationError, UndefinedResultError


def chsh_formula(phi: float) -> float:
    """|1 + 2 cos(phi) - cos(2 phi)|, the singlet's CHSH value at angle phi."""
    return abs(1.0 + 2.0 * math.cos(phi) - math.cos(2.0 * phi))


def _trace_real(matrix: np.ndarray, operation: str) -> float:
    value = complex(np.trace(matrix))
    if abs(value.imag) > sim_settings.imag_tol:
        raise SimulationError("trace has a non-negligible imaginary part", operation=operation, details={"imag": value.imag})
    return value.real


def chsh_exact(rho: DensityOperator, settings: ChshSettings) -> ChshResult:
    """
    Exact CHSH correlators of a two-party state.

    Logical correlators are conditioned on both parties landing in the code
    sector: E(X, Y) = Tr(rho X(x)Y) / Tr(rho P(x)P).

    Args:
        rho: Two-party state, 2 or 6 qubits depending on the flavor
        settings: The four observables

    Returns:
        Correlators, S and the reject rate

    Raises:
        DimensionMismatchError: If rho does not fit the flavor
        UndefinedResultError: If both parties can never accept together
    """
    party_dim = settings.a.dim
    if rho.dim != party_dim * party_dim:
        raise DimensionMismatchError(
            f"{settings.flavor.value} needs a {party_dim * party_dim}-dim state, got {rho.dim}",
            operation="chsh_exact",
        )
    accept_party = settings.accept_projector()
    accept = _trace_real(rho.matrix @ np.kron(accept_party, accept_party), "chsh_exact")
    if accept <= sim_settings.reject_tol:
        raise UndefinedResultError(
            "both parties reject with certainty",
            operation="chsh_exact",
            details={"accept_probability": accept},
        )
    correlators = tuple(
        _trace_real(rho.matrix @ np.kron(left.matrix, right.matrix), "chsh_exact") / accept
        for left, right in settings.pairs()
    )
    result = ChshResult.from_correlators(
        settings.flavor,
        settings.phi,
        correlators,
        reject_rate=min(1.0, max(0.0, 1.0 - accept)),
    )
    logger.debug(f"chsh_exact {settings.flavor.value} phi={settings.phi:.6f}: S={result.s_value:.12f}")
    return result


def lhv_assignments() -> List[Tuple[int, int, int, int, int]]:
    """Every deterministic assignment (A, A', B, B') with its value AB + A'B + AB' - A'B'."""
    rows = []
    for a, a_prime, b, b_prime in itertools.product((1, -1), repeat=4):
        products = (a * b, a_prime * b, a * b_prime, a_prime * b_prime)
        value = int(sum(sign * p for sign, p in zip(SETTING_SIGNS, products)))
        rows.append((a, a_prime, b, b_prime, value))
    return rows


def lhv_bound() -> int:
    """Largest |S| any local deterministic assignment reaches."""
    return max(abs(row[-1]) for row in lhv_assignments())
