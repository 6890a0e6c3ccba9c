"""Independent linear-algebra ground truth for the separability tests.

A pure state is p-q separable exactly when its amplitudes, reshaped to a
P x Q matrix, form a rank-1 matrix.  Rank is probed by 2x2 minors against
the largest-magnitude entry: if every minor through that pivot vanishes,
the matrix is an outer product and all minors vanish.  This costs O(PQ)
elementary operations and shares no code path with the criterion modules,
which is the point: tests compare the two routes on every state.
"""
from __future__ import annotations

import numpy as np

from .errors import BadSplitError
from .state import PureState

# Minor magnitudes are compared against tol * (largest entry magnitude)^2,
# the largest product of two entries, mirroring the criterion tolerances.
DEFAULT_TOL_RANK = 1e-9


def reshape_matrix(state: PureState, p: int) -> np.ndarray:
    """The P x Q amplitude matrix of a split after qubit p-1."""
    if not 1 <= p <= state.n - 1:
        raise BadSplitError(f"split p={p} outside [1, {state.n - 1}] for n={state.n}")
    return state.amplitudes.reshape(1 << p, 1 << (state.n - p))


def oracle_pq(state: PureState, p: int, tol_rank: float = DEFAULT_TOL_RANK) -> bool:
    """True iff the reshaped amplitude matrix has rank one."""
    M = reshape_matrix(state, p)
    mags = np.abs(M)
    flat = int(np.argmax(mags))
    k, r = divmod(flat, M.shape[1])
    top = mags[k, r]
    if top == 0.0:
        return True  # all-zero matrix: rank 0, vacuously an outer product
    minors = M * M[k, r] - np.outer(M[:, r], M[k, :])
    return bool(np.max(np.abs(minors)) <= tol_rank * top * top)


def oracle_fully_separable(state: PureState, tol_rank: float = DEFAULT_TOL_RANK) -> bool:
    """True iff every contiguous cut (first j qubits vs rest) has a rank-1 reshape."""
    if state.n == 1:
        return True
    return all(oracle_pq(state, p, tol_rank) for p in range(1, state.n))
