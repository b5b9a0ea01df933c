"""Array-level linear algebra shared by every feature.

These helpers take and return plain numpy arrays; the model-level wrappers in
`state_ops` add the domain-type validation on top.
"""

from functools import reduce
from typing import List, Optional, Sequence, Tuple

import numpy as np

SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
IDENTITY_2 = np.eye(2, dtype=complex)


def kron_all(*factors: np.ndarray) -> np.ndarray:
    """Kronecker product, left factor slowest."""
    return reduce(np.kron, factors)


def basis_ket(bits: str) -> np.ndarray:
    """Computational basis ket from a bit string such as "010"."""
    if not bits or any(b not in "01" for b in bits):
        raise ValueError(f"bit string must contain only 0 and 1, got '{bits}'")
    ket = np.zeros(2 ** len(bits), dtype=complex)
    ket[int(bits, 2)] = 1.0
    return ket


def projector(vector: np.ndarray) -> np.ndarray:
    return np.outer(vector, vector.conj())


def hermitian_part(matrix: np.ndarray) -> np.ndarray:
    return 0.5 * (matrix + matrix.conj().T)


def partial_trace_array(matrix: np.ndarray, dims: Sequence[int], keep: Sequence[int]) -> np.ndarray:
    """
    Trace out every subsystem not listed in `keep`.

    Kept subsystems stay in their original order.

    Raises:
        ValueError: If the dimensions do not multiply to the matrix size, or `keep`
            is empty, repeats an index or holds one out of range
    """
    dims = [int(d) for d in dims]
    total = int(np.prod(dims))
    if matrix.shape != (total, total):
        raise ValueError(f"dims {dims} do not match matrix shape {matrix.shape}")
    keep = [int(k) for k in keep]
    if not keep:
        raise ValueError("keep must name at least one subsystem")
    if len(set(keep)) != len(keep):
        raise ValueError(f"keep indices {keep} repeat a subsystem")
    keep = sorted(keep)
    if any(k < 0 or k >= len(dims) for k in keep):
        raise ValueError(f"keep indices {keep} out of range for {len(dims)} subsystems")

    n = len(dims)
    tensor = matrix.reshape(dims + dims)
    remaining = n
    for axis in reversed(range(n)):
        if axis in keep:
            continue
        tensor = np.trace(tensor, axis1=axis, axis2=axis + remaining)
        remaining -= 1
    kept_dim = int(np.prod([dims[k] for k in keep]))
    return tensor.reshape(kept_dim, kept_dim)


def permute_qubits(vector: np.ndarray, order: Sequence[int]) -> np.ndarray:
    """Reorder the tensor factors of an n-qubit ket; `order[k]` is the old position of new factor k."""
    n = int(np.log2(vector.shape[0]))
    return vector.reshape([2] * n).transpose(list(order)).reshape(-1)


def spectral_projectors(matrix: np.ndarray, tol: float = 1e-9) -> List[Tuple[float, np.ndarray]]:
    """
    Group the eigenvectors of a Hermitian matrix into outcome projectors.

    Non-zero eigenvalues become measurement outcomes; the kernel, if any, is
    returned last with value 0.0 and marks the reject outcome.
    """
    values, vectors = np.linalg.eigh(hermitian_part(matrix))
    groups: List[Tuple[float, List[int]]] = []
    kernel: List[int] = []
    for index, value in enumerate(values):
        if abs(value) <= tol:
            kernel.append(index)
            continue
        for group_value, members in groups:
            if abs(group_value - value) <= tol:
                members.append(index)
                break
        else:
            groups.append((float(value), [index]))

    outcomes = []
    for value, members in sorted(groups, key=lambda g: -g[0]):
        basis = vectors[:, members]
        outcomes.append((value, basis @ basis.conj().T))
    if kernel:
        basis = vectors[:, kernel]
        outcomes.append((0.0, basis @ basis.conj().T))
    return outcomes


def haar_random_state(n_qubits: int, rng: np.random.Generator) -> np.ndarray:
    """Unit vector drawn uniformly from the complex sphere of a 2^n register."""
    dim = 2**n_qubits
    while True:
        vector = rng.normal(size=dim) + 1j * rng.normal(size=dim)
        norm = np.linalg.norm(vector)
        if norm > 1e-12:
            return vector / norm


def random_density_matrix(n_qubits: int, rng: np.random.Generator, rank: Optional[int] = None) -> np.ndarray:
    """Mixed state from a Ginibre matrix of the given rank (full rank by default)."""
    dim = 2**n_qubits
    rank = rank or dim
    ginibre = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = ginibre @ ginibre.conj().T
    return hermitian_part(rho / np.trace(rho).real)
