"""Pure n-qubit statevectors: construction, tensor products, qubit permutations.

Conventions used throughout the package:

* A state on n qubits is a vector of N = 2**n complex amplitudes.
* Qubit 0 is the MOST significant index bit (big-endian): basis index i
  has binary expansion b_0 b_1 ... b_{n-1} with qubit 0 first.  Splitting
  after qubit p-1 therefore maps index i to (group k, offset r) with
  i = k*Q + r and Q = 2**(n-p), exactly the layout of ``numpy.kron``.
* States are validated, never silently renormalized.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    BadPermutationError,
    LengthMismatchError,
    NotNormalizedError,
)

# Relative tolerance on |sum of squared magnitudes - 1| accepted by make_state.
DEFAULT_TOL_NORM = 1e-9


def _freeze(a: np.ndarray) -> np.ndarray:
    out = np.ascontiguousarray(a, dtype=np.complex128)
    if out is a:
        out = out.copy()
    out.flags.writeable = False
    return out


@dataclass(frozen=True, eq=False)
class PureState:
    """Immutable amplitude vector of a pure n-qubit state.

    Instances are normally built through :func:`make_state` (which checks
    normalization) or returned by package operations, which only produce
    vectors that are normalized by construction.
    """

    n: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if self.n < 1:
            raise LengthMismatchError(f"qubit count must be >= 1, got {self.n}")
        amps = _freeze(np.asarray(self.amplitudes))
        if amps.ndim != 1 or amps.shape[0] != 1 << self.n:
            raise LengthMismatchError(
                f"expected {1 << self.n} amplitudes for n={self.n}, got shape {amps.shape}"
            )
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return 1 << self.n

    def norm(self) -> float:
        """Euclidean norm of the amplitude vector."""
        return float(np.linalg.norm(self.amplitudes))

    def __repr__(self) -> str:
        return f"PureState(n={self.n}, dim={self.dim})"


@dataclass(frozen=True)
class QubitFactor:
    """A single-qubit state (two complex amplitudes), normalized."""

    amp0: complex
    amp1: complex

    def __post_init__(self) -> None:
        nrm2 = abs(self.amp0) ** 2 + abs(self.amp1) ** 2
        if abs(nrm2 - 1.0) > DEFAULT_TOL_NORM:
            raise NotNormalizedError(f"qubit factor norm^2 = {nrm2!r}")

    def to_state(self) -> PureState:
        return PureState(1, np.array([self.amp0, self.amp1], dtype=np.complex128))

    def as_array(self) -> np.ndarray:
        return np.array([self.amp0, self.amp1], dtype=np.complex128)


@dataclass(frozen=True)
class QubitPermutation:
    """Relabeling of qubit positions: ``perm[j]`` is the source qubit placed at position j."""

    perm: tuple[int, ...]

    def __post_init__(self) -> None:
        perm = tuple(int(p) for p in self.perm)
        if sorted(perm) != list(range(len(perm))):
            raise BadPermutationError(f"not a bijection on 0..{len(perm) - 1}: {perm}")
        object.__setattr__(self, "perm", perm)

    def __len__(self) -> int:
        return len(self.perm)

    def inverse(self) -> "QubitPermutation":
        inv = [0] * len(self.perm)
        for j, p in enumerate(self.perm):
            inv[p] = j
        return QubitPermutation(tuple(inv))


def make_state(n: int, amplitudes: Sequence[complex] | np.ndarray,
               tol_norm: float = DEFAULT_TOL_NORM) -> PureState:
    """Validate and wrap raw amplitudes as a PureState.

    The amplitudes are stored unmodified; a vector whose squared magnitudes
    do not sum to 1 within ``tol_norm`` is rejected, never renormalized.
    """
    amps = np.asarray(amplitudes, dtype=np.complex128)
    if amps.ndim != 1 or amps.shape[0] != 1 << n:
        raise LengthMismatchError(
            f"expected {1 << n} amplitudes for n={n}, got {amps.shape[0] if amps.ndim == 1 else amps.shape}"
        )
    nrm2 = float(np.sum(np.abs(amps) ** 2))
    if abs(nrm2 - 1.0) > tol_norm:
        raise NotNormalizedError(f"squared norm is {nrm2!r}, not 1 within {tol_norm}")
    return PureState(n, amps)


def tensor(left: PureState, right: PureState) -> PureState:
    """Tensor product; result amplitude at k*Q + r is left[k] * right[r], Q = right.dim."""
    return PureState(left.n + right.n, np.kron(left.amplitudes, right.amplitudes))


def tensor_all(states: Sequence[PureState]) -> PureState:
    """Left-to-right tensor product of one or more states."""
    if not states:
        raise ValueError("need at least one state")
    out = states[0]
    for s in states[1:]:
        out = tensor(out, s)
    return out


def permute_qubits(state: PureState, perm: QubitPermutation | Sequence[int]) -> PureState:
    """Reorder qubits: output position t holds the qubit that was at position perm[t].

    Pure index gather, so applying a permutation and then its inverse
    returns the original amplitudes bit-exactly.
    """
    if not isinstance(perm, QubitPermutation):
        perm = QubitPermutation(tuple(perm))
    n = state.n
    if len(perm) != n:
        raise BadPermutationError(f"permutation length {len(perm)} != qubit count {n}")
    out_idx = np.arange(1 << n)
    src_idx = np.zeros(1 << n, dtype=np.int64)
    for t, src in enumerate(perm.perm):
        bit = (out_idx >> (n - 1 - t)) & 1
        src_idx |= bit << (n - 1 - src)
    return PureState(n, state.amplitudes[src_idx])


def random_structured_state(
    block_sizes: Sequence[int],
    seed: int,
    zero_mask_per_block: Sequence[np.ndarray | None] | None = None,
) -> PureState:
    """Random state that is separable exactly along the given qubit blocks.

    Each block state is drawn Haar-like: i.i.d. standard complex Gaussian
    amplitudes over the block's nonzero support, then normalized; the
    result is the tensor product of the blocks.  Deterministic for a fixed
    seed (numpy ``default_rng``, PCG64).

    ``zero_mask_per_block`` optionally gives, per block, a boolean support
    mask of length 2**block_size; amplitudes outside the support are
    exactly zero.  ``None`` entries mean full support.
    """
    sizes = [int(b) for b in block_sizes]
    if not sizes or any(b < 1 for b in sizes):
        raise ValueError(f"block sizes must be positive, got {sizes}")
    if zero_mask_per_block is not None and len(zero_mask_per_block) != len(sizes):
        raise ValueError("need one support mask (or None) per block")
    rng = np.random.default_rng(seed)
    blocks: list[PureState] = []
    for pos, b in enumerate(sizes):
        dim = 1 << b
        z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        if zero_mask_per_block is not None and zero_mask_per_block[pos] is not None:
            support = np.asarray(zero_mask_per_block[pos], dtype=bool)
            if support.shape != (dim,) or not support.any():
                raise ValueError(f"block {pos}: support mask must be length {dim} with a nonzero entry")
            z = np.where(support, z, 0.0)
        z /= np.linalg.norm(z)
        blocks.append(PureState(b, z))
    return tensor_all(blocks)
