from typing import List, Tuple

import numpy as np
import scipy.linalg

from fock_entanglement.data_objects import DEFAULT_TOLERANCE


def _degenerate_groups(values: np.ndarray, tol: float) -> List[List[int]]:
    groups: List[List[int]] = []
    scale = values[0] if values.size else 0.0
    for index, value in enumerate(values):
        if groups and abs(values[groups[-1][0]] - value) <= tol * max(scale, 1e-300):
            groups[-1].append(index)
        else:
            groups.append([index])
    return groups


def takagi(matrix: np.ndarray, tol: float = DEFAULT_TOLERANCE) -> Tuple[np.ndarray, np.ndarray]:
    """Takagi factorization of a complex symmetric matrix.

    Returns (values, U) with values >= 0 in descending order, U unitary and
    matrix = U @ diag(values) @ U.T.

    Computed from the singular value decomposition matrix = V S W^H: inside every
    group of equal singular values Z = V_g^T W_g is unitary and symmetric, and
    U_g = V_g conj(sqrt(Z)). Singular values closer than tol (relative to the largest)
    are treated as equal.
    """
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError(f"Takagi factorization needs a square matrix, got shape {matrix.shape}")
    scale = max(float(np.max(np.abs(matrix), initial=0.0)), 1.0)
    if not np.allclose(matrix, matrix.T, atol=tol * scale, rtol=0):
        raise ValueError("Takagi factorization needs a symmetric matrix")

    v, singular_values, w_adjoint = np.linalg.svd(matrix)
    w = w_adjoint.conj().T
    zero = singular_values <= tol * max(singular_values[0] if singular_values.size else 0.0, 1e-300)

    blocks = []
    for indices in _degenerate_groups(singular_values, tol):
        if zero[indices[0]]:
            # the null space contributes nothing; any orthonormal basis will do
            blocks.append(np.eye(len(indices), dtype=complex))
            continue
        z = v[:, indices].T @ w[:, indices]
        blocks.append(scipy.linalg.sqrtm(z))
    q = scipy.linalg.block_diag(*blocks)
    return singular_values, v @ q.conj()


def nonzero_count(values: np.ndarray, tol: float = DEFAULT_TOLERANCE) -> int:
    """Number of values above tol relative to the largest"""
    if values.size == 0 or values[0] == 0:
        return 0
    return int(np.sum(values > tol * values[0]))
