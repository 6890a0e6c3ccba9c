"""Finest tensor factorization of a state by exhaustive subset search.

Every unordered bipartition of the current qubit block is probed once
(subsets containing the block's first qubit, ordered by size then
lexicographically); the first separating subset splits the block and both
factors are decomposed recursively.  A block none of whose subsets
separates is irreducible.  The search is exponential in the block size,
so it is capped at desk scale.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import TooLargeError
from .fullsep import DEFAULT_TOL_PP, DEFAULT_TOL_ZERO
from .state import PureState, QubitPermutation, permute_qubits, tensor_all
from .pqsep import is_pq_separable_subset

N_MAX_DECOMPOSE = 14


@dataclass(frozen=True)
class FactorBlock:
    """An irreducible factor: the original qubit indices it covers and its state."""

    qubits: tuple[int, ...]
    state: PureState


@dataclass(frozen=True)
class FactorTree:
    """Finest factorization of a state into irreducible blocks.

    ``permutation[j]`` is the original qubit sitting at position j of the
    flat tensor product of the block states (blocks in listed order).
    """

    blocks: tuple[FactorBlock, ...]
    permutation: tuple[int, ...]

    def block_sets(self) -> list[frozenset[int]]:
        return [frozenset(b.qubits) for b in self.blocks]

    def reconstruct(self) -> PureState:
        """Tensor the blocks back together and restore the original qubit order."""
        product = tensor_all([b.state for b in self.blocks])
        inverse = QubitPermutation(self.permutation).inverse()
        return permute_qubits(product, inverse)


def count_bipartitions(n: int) -> int:
    """Number of unordered nontrivial bipartitions of n qubits: 2**(n-1) - 1."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return (1 << (n - 1)) - 1


def _split_candidates(m: int):
    """Proper subsets of 0..m-1 containing 0, by (size, lexicographic) order."""
    for size in range(1, m):
        for tail in combinations(range(1, m), size - 1):
            yield (0, *tail)


def decompose(
    state: PureState,
    tol_zero: float = DEFAULT_TOL_ZERO,
    tol_pp: float = DEFAULT_TOL_PP,
) -> FactorTree:
    """Finest factorization into irreducible blocks of original qubit indices."""
    if state.n > N_MAX_DECOMPOSE:
        raise TooLargeError(f"n={state.n} exceeds decomposition cap {N_MAX_DECOMPOSE}")
    blocks: list[FactorBlock] = []

    def rec(block_state: PureState, labels: tuple[int, ...]) -> None:
        m = block_state.n
        if m > 1:
            for cand in _split_candidates(m):
                report = is_pq_separable_subset(block_state, set(cand), tol_zero, tol_pp)
                if report.separable:
                    left, right = report.factors
                    chosen = sorted(cand)
                    rest = [i for i in range(m) if i not in cand]
                    rec(left, tuple(labels[i] for i in chosen))
                    rec(right, tuple(labels[i] for i in rest))
                    return
        blocks.append(FactorBlock(labels, block_state))

    rec(state, tuple(range(state.n)))
    flat = tuple(q for b in blocks for q in b.qubits)
    return FactorTree(tuple(blocks), flat)
