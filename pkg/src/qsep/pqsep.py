"""Separability of a pure state across a p/q qubit split, with factor construction.

Viewing the N = P*Q amplitudes as a P x Q array (group k = leading p
qubits, offset r = trailing q qubits), the state is a product of a
p-qubit and a q-qubit state iff the array has rank one.  With the pivot
(first nonzero amplitude) at (k0, r0), that is equivalent to two checks:

(a) cross products: amp[k0,r0] * amp[k,r] == amp[k0,r] * amp[k,r0]
    for all k > k0, r > r0;
(b) zero pattern: amp[k,r] == 0 for every k and every r < r0.

Condition (b) is not implied by (a): a state like (0, a, b, 0) satisfies
(a) vacuously (the index ranges are empty) yet is entangled.  Both are
checked.  When they hold, the factors follow from the pivot row and
pivot column, with the right factor's pivot entry fixed real positive.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AllZeroError, BadSplitError, NotSeparableError
from .fullsep import DEFAULT_TOL_PP, DEFAULT_TOL_ZERO
from .state import PureState, QubitPermutation, permute_qubits, tensor


@dataclass(frozen=True)
class Pivot:
    """Position of the first nonzero amplitude: flat index i0 = k0*Q + r0."""

    i0: int
    k0: int
    r0: int


@dataclass(frozen=True)
class CrossProductWitness:
    """Violating (k, r) cell of condition (a) with the two differing products."""

    k: int
    r: int
    pivot_product: complex
    cross_product: complex


@dataclass(frozen=True)
class ZeroPatternWitness:
    """Amplitude required zero by condition (b) but found nonzero."""

    index: int
    k: int
    r: int
    amplitude: complex


@dataclass(frozen=True)
class PqReport:
    """Outcome of the p-q separability decision; factors present iff separable."""

    separable: bool
    p: int
    q: int
    witness: CrossProductWitness | ZeroPatternWitness | None
    factors: tuple[PureState, PureState] | None
    comparisons: int = 0
    permutation: tuple[int, ...] | None = None


def _check_split(n: int, p: int) -> None:
    if not 1 <= p <= n - 1:
        raise BadSplitError(f"split p={p} outside [1, {n - 1}] for n={n}")


def find_pivot(state: PureState, p: int, tol_zero: float = DEFAULT_TOL_ZERO) -> Pivot:
    """Smallest index with magnitude above tol_zero, in (group, offset) coordinates."""
    _check_split(state.n, p)
    nz = np.abs(state.amplitudes) > tol_zero
    if not nz.any():
        raise AllZeroError("state has no amplitude above the zero tolerance")
    i0 = int(np.argmax(nz))
    Q = 1 << (state.n - p)
    return Pivot(i0, i0 // Q, i0 % Q)


def is_pq_separable(
    state: PureState,
    p: int,
    tol_zero: float = DEFAULT_TOL_ZERO,
    tol_pp: float = DEFAULT_TOL_PP,
) -> PqReport:
    """Decide whether the state factors into (first p qubits) x (last q qubits)."""
    _check_split(state.n, p)
    q = state.n - p
    P, Q = 1 << p, 1 << q
    pivot = find_pivot(state, p, tol_zero)
    M = state.amplitudes.reshape(P, Q)
    k0, r0 = pivot.k0, pivot.r0

    # (b) columns left of the pivot offset must vanish in every group.
    if r0 > 0:
        left = np.abs(M[:, :r0]) > tol_zero
        if left.any():
            flat = int(np.argmax(left))
            k, r = divmod(flat, r0)
            return PqReport(False, p, q,
                            ZeroPatternWitness(k * Q + r, k, r, complex(M[k, r])),
                            None)

    # (a) cross products against the pivot, over the block below and right of it.
    comparisons = 0
    if k0 + 1 < P and r0 + 1 < Q:
        sub = M[k0 + 1 :, r0 + 1 :]
        lhs = M[k0, r0] * sub
        rhs = np.outer(M[k0 + 1 :, r0], M[k0, r0 + 1 :])
        comparisons = sub.size
        diff = np.abs(lhs - rhs)
        scale = np.maximum(1.0, np.maximum(np.abs(lhs), np.abs(rhs)))
        bad = diff > tol_pp * scale
        if bad.any():
            flat = int(np.argmax(bad))
            dk, dr = divmod(flat, sub.shape[1])
            k, r = k0 + 1 + dk, r0 + 1 + dr
            return PqReport(False, p, q,
                            CrossProductWitness(k, r, complex(lhs[dk, dr]), complex(rhs[dk, dr])),
                            None, comparisons=comparisons)

    left, right = factor_pq(state, p, pivot, tol_zero)
    return PqReport(True, p, q, None, (left, right), comparisons=comparisons)


def factor_pq(
    state: PureState,
    p: int,
    pivot: Pivot | None = None,
    tol_zero: float = DEFAULT_TOL_ZERO,
) -> tuple[PureState, PureState]:
    """Construct the two normalized factors of a p-q separable state.

    The right factor is the pivot group's row scaled so its pivot entry is
    real positive with the modulus that normalizes the row; the left
    factor is the pivot column divided by that entry.  A defensive
    reconstruction check turns tolerance edge cases into an explicit
    NotSeparableError instead of silently wrong factors.
    """
    _check_split(state.n, p)
    q = state.n - p
    P, Q = 1 << p, 1 << q
    if pivot is None:
        pivot = find_pivot(state, p, tol_zero)
    M = state.amplitudes.reshape(P, Q)
    k0, r0 = pivot.k0, pivot.r0
    pivot_amp = M[k0, r0]

    tail = M[k0, r0 + 1 :]
    pivot_mod = 1.0 / np.sqrt(1.0 + float(np.sum(np.abs(tail) ** 2)) / abs(pivot_amp) ** 2)
    right = pivot_mod * M[k0, :] / pivot_amp
    left = M[:, r0] / pivot_mod

    residual = float(np.max(np.abs(np.kron(left, right) - state.amplitudes)))
    if residual > 1e-9:
        raise NotSeparableError(f"factor reconstruction residual {residual:.3e} exceeds 1e-9")
    return PureState(p, left), PureState(q, right)


def subset_permutation(n: int, subset: frozenset[int] | set[int]) -> QubitPermutation:
    """Permutation moving the subset's qubits (increasing) to the front, the rest (increasing) after."""
    chosen = sorted(subset)
    if not chosen or len(chosen) >= n or chosen[0] < 0 or chosen[-1] >= n:
        raise BadSplitError(f"subset must be a nonempty proper subset of 0..{n - 1}, got {sorted(subset)}")
    rest = [i for i in range(n) if i not in subset]
    return QubitPermutation(tuple(chosen + rest))


def is_pq_separable_subset(
    state: PureState,
    subset: frozenset[int] | set[int],
    tol_zero: float = DEFAULT_TOL_ZERO,
    tol_pp: float = DEFAULT_TOL_PP,
) -> PqReport:
    """Decide separability of an arbitrary qubit subset against its complement.

    Routes the subset's qubits to the leading positions and delegates to
    the contiguous-split test; the report's factors refer to the permuted
    order and the permutation used is recorded on the report.
    """
    perm = subset_permutation(state.n, subset)
    permuted = permute_qubits(state, perm)
    report = is_pq_separable(permuted, len(subset), tol_zero, tol_pp)
    return PqReport(report.separable, report.p, report.q, report.witness,
                    report.factors, report.comparisons, permutation=perm.perm)
