"""Shared state builders: named states, the mixed random corpus, regression families."""
from __future__ import annotations

import numpy as np
import pytest

from qsep import PureState, make_state, random_structured_state

MASTER_SEED = 987654321


def ghz(n: int) -> PureState:
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[0] = amps[-1] = 1 / np.sqrt(2)
    return make_state(n, amps)


def w_state(n: int) -> PureState:
    amps = np.zeros(1 << n, dtype=np.complex128)
    for j in range(n):
        amps[1 << j] = 1 / np.sqrt(n)
    return make_state(n, amps)


def bell() -> PureState:
    return make_state(2, np.array([1, 0, 0, 1]) / np.sqrt(2))


def plus() -> PureState:
    return make_state(1, np.array([1, 1]) / np.sqrt(2))


def basis_state(n: int, index: int) -> PureState:
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[index] = 1.0
    return make_state(n, amps)


def random_composition(rng: np.random.Generator, n: int) -> list[int]:
    """Random ordered block sizes summing to n with at least two blocks when n >= 2."""
    while True:
        sizes, left = [], n
        while left > 0:
            b = int(rng.integers(1, left + 1))
            sizes.append(b)
            left -= b
        if len(sizes) >= 2 or n == 1:
            return sizes


def random_support(rng: np.random.Generator, block: int) -> np.ndarray | None:
    """Random nonempty support mask for a block, or None for full support."""
    if rng.random() < 0.25:
        return None
    dim = 1 << block
    mask = rng.random(dim) < 0.6
    if not mask.any():
        mask[int(rng.integers(dim))] = True
    return mask


def build_corpus(per_n: int, n_values: tuple[int, ...] = (2, 3, 4, 5, 6, 7, 8)) -> dict[int, list[tuple[str, PureState]]]:
    """Deterministic mix of full products, entangled states, partial products, zero-pattern products."""
    rng = np.random.default_rng(MASTER_SEED)
    corpus: dict[int, list[tuple[str, PureState]]] = {}
    for n in n_values:
        states: list[tuple[str, PureState]] = []
        quota = per_n // 4
        for i in range(quota):
            seed = int(rng.integers(2**63))
            states.append(("product", random_structured_state([1] * n, seed)))
        for i in range(quota):
            seed = int(rng.integers(2**63))
            states.append(("entangled", random_structured_state([n], seed)))
        for i in range(quota):
            seed = int(rng.integers(2**63))
            sizes = random_composition(rng, n)
            states.append(("partial", random_structured_state(sizes, seed)))
        while len(states) < per_n:
            seed = int(rng.integers(2**63))
            sizes = random_composition(rng, n)
            masks = [random_support(rng, b) for b in sizes]
            states.append(("zeros", random_structured_state(sizes, seed, masks)))
        corpus[n] = states
    return corpus


def vacuous_condition_states(n: int, p: int, rng: np.random.Generator, count: int = 5) -> list[PureState]:
    """Entangled two-amplitude states whose cross-product condition holds vacuously.

    Support {(0, r0), (k, r')} with r' < r0 in group coordinates: every
    cross product against the pivot compares zeros, so only the zero
    pattern betrays the entanglement.  Generalizes (0, a, b, 0).
    """
    q = n - p
    P, Q = 1 << p, 1 << q
    out = []
    for _ in range(count):
        r0 = int(rng.integers(1, Q))
        rp = int(rng.integers(0, r0))
        k = int(rng.integers(1, P))
        a = rng.standard_normal() + 1j * rng.standard_normal()
        b = rng.standard_normal() + 1j * rng.standard_normal()
        amps = np.zeros(1 << n, dtype=np.complex128)
        amps[r0] = a
        amps[k * Q + rp] = b
        amps /= np.linalg.norm(amps)
        out.append(make_state(n, amps))
    return out


@pytest.fixture(scope="session")
def corpus() -> dict[int, list[tuple[str, PureState]]]:
    return build_corpus(per_n=1000)


@pytest.fixture(scope="session")
def small_corpus() -> dict[int, list[tuple[str, PureState]]]:
    return build_corpus(per_n=60, n_values=(2, 3, 4, 5))
