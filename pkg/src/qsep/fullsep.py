"""Full separability of a pure state and construction of its single-qubit factors.

A state is a tensor product of n single-qubit states exactly when

1. its zero pattern is *well-formed* — a member of the recursively defined
   bit-string family B_2 = {01, 10, 11}, B_2N = {0^N x, x 0^N, xx} — and
2. the vector of its nonzero amplitudes, taken in index order (*zero
   deletion*), is *pair product invariant*: for every power-of-two prefix
   length L, all products a_i * a_{L-1-i} agree.

Both checks run in linear time.  Well-formedness is decided on the sorted
list of zero positions; pair product invariance needs exactly K - k - 1
product comparisons for K = 2**k nonzero amplitudes.  When the test
passes, the factors are read off by recursively halving the vector.
"""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import BadLengthError, NotSeparableError, TooFewNonzeroError, TooLargeError
from .state import PureState, QubitFactor

# Absolute magnitude below which an amplitude counts as zero.  Stricter than
# the product tolerance: masks must not flip under noise that products tolerate.
DEFAULT_TOL_ZERO = 1e-12
# Relative tolerance for product equality: |x - y| <= tol * max(1, |x|, |y|).
DEFAULT_TOL_PP = 1e-9
# enumerate_well_formed cap: 3**12 masks is the largest worth materializing.
N_MAX_ENUM = 12


@dataclass(frozen=True, eq=False)
class SupportMask:
    """Boolean support pattern of an amplitude vector; bit i marks a nonzero amplitude."""

    bits: np.ndarray
    popcount: int = field(init=False)

    def __post_init__(self) -> None:
        bits = np.ascontiguousarray(self.bits, dtype=bool)
        if bits is self.bits:
            bits = bits.copy()
        bits.flags.writeable = False
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "popcount", int(bits.sum()))

    def __len__(self) -> int:
        return len(self.bits)

    def as_string(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)

    def __repr__(self) -> str:
        s = self.as_string()
        if len(s) > 32:
            s = s[:29] + "..."
        return f"SupportMask({s}, popcount={self.popcount})"


class Reason(str, Enum):
    """Outcome classification of the full-separability test."""

    WELL_FORMEDNESS_FAILED = "WellFormednessFailed"
    PAIR_PRODUCT_FAILED = "PairProductFailed"
    SEPARABLE = "Separable"
    TRIVIAL_BASIS_STATE = "TrivialBasisState"


@dataclass(frozen=True)
class PairProductWitness:
    """First violating pair-product comparison: level L = 2**level, pairs (0, L-1) vs (index, L-1-index)."""

    level: int
    index: int
    ref_pair: tuple[int, int]
    bad_pair: tuple[int, int]
    ref_product: complex
    bad_product: complex


@dataclass(frozen=True)
class WellFormednessWitness:
    """Block size at which the zero-pattern recursion rejected the mask."""

    block_size: int


@dataclass(frozen=True)
class PairProductResult:
    invariant: bool
    witness: PairProductWitness | None
    comparisons: int
    products: int


@dataclass(frozen=True)
class WfResult:
    well_formed: bool
    comparisons: int
    failed_block: int | None


@dataclass(frozen=True)
class FullSepReport:
    """Diagnosable outcome of the full-separability decision.

    ``factors`` is present iff separable; ``witness`` is present iff not.
    The counters record the work done: amplitude products formed, product
    comparisons, and integer comparisons spent on the zero pattern.
    """

    separable: bool
    reason: Reason
    witness: PairProductWitness | WellFormednessWitness | None
    factors: tuple[QubitFactor, ...] | None
    products: int = 0
    pair_comparisons: int = 0
    wf_comparisons: int = 0


def amplitude_abstraction(state: PureState, tol_zero: float = DEFAULT_TOL_ZERO) -> SupportMask:
    """Support mask of a state: bit i is set iff the amplitude magnitude exceeds tol_zero."""
    if tol_zero < 0:
        raise ValueError("tol_zero must be >= 0")
    return SupportMask(np.abs(state.amplitudes) > tol_zero)


def zero_indices(mask: SupportMask) -> list[int]:
    """Strictly increasing list of the zero positions of a mask."""
    return np.flatnonzero(~mask.bits).tolist()


def _is_pow2(m: int) -> bool:
    return m >= 1 and (m & (m - 1)) == 0


def wf_zero_check(zeros: list[int], size: int) -> WfResult:
    """Decide well-formedness from the sorted zero-position list of a length-``size`` mask.

    Recursively halves the block: a half that is entirely zero must pair
    with a well-formed other half, otherwise the two halves' zero patterns
    must be identical.  The comparison counter covers length tests and
    element equality checks, the quantities that grow with the input;
    split points are found by binary search.  An empty list (full support)
    short-circuits to True.  Worst case: |zeros| + O(log |zeros|).

    Callers must exclude the all-zero pattern first; it is not well-formed
    but would survive the recursion.
    """
    if not _is_pow2(size) or size < 2:
        raise BadLengthError(f"mask length must be a power of two >= 2, got {size}")
    count = 0
    failed_at: int | None = None

    def rec(zs: list[int], block: int) -> bool:
        nonlocal count, failed_at
        count += 1
        if not zs:
            return True
        if block == 2:
            return True
        half = block >> 1
        cut = bisect_left(zs, half)
        low = zs[:cut]
        high = [i - half for i in zs[cut:]]
        count += 1
        if len(low) > len(high):
            count += 1
            if len(low) == half and rec(high, half):
                return True
            failed_at = failed_at or block
            return False
        count += 1
        if len(low) < len(high):
            count += 1
            if len(high) == half and rec(low, half):
                return True
            failed_at = failed_at or block
            return False
        count += len(low)
        if low == high and rec(low, half):
            return True
        failed_at = failed_at or block
        return False

    ok = rec(list(zeros), size)
    return WfResult(ok, count, None if ok else failed_at)


def is_well_formed_mask(mask: SupportMask) -> bool:
    """True iff the mask belongs to the well-formed family B_N."""
    if mask.popcount == 0:
        return False
    return wf_zero_check(zero_indices(mask), len(mask)).well_formed


def enumerate_well_formed(n: int) -> list[SupportMask]:
    """All well-formed masks of length 2**n, in lexicographic order; exactly 3**n of them."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > N_MAX_ENUM:
        raise TooLargeError(f"n={n} exceeds enumeration cap {N_MAX_ENUM}")
    # Masks as integers with bit position 0 of the string at the MSB, so
    # numeric order is lexicographic order.
    cur = [0b01, 0b10, 0b11]
    for level in range(1, n):
        width = 1 << level
        cur = [v for x in cur for v in (x, x << width, (x << width) | x)]
    cur = sorted(set(cur))
    size = 1 << n
    out = []
    for v in cur:
        s = format(v, f"0{size}b")
        bits = np.frombuffer(s.encode("ascii"), dtype=np.uint8) == ord("1")
        out.append(SupportMask(bits))
    return out


def zero_deletion(state: PureState, mask: SupportMask) -> np.ndarray:
    """The K nonzero amplitudes of a state in index order (K = mask popcount >= 2)."""
    if mask.popcount < 2:
        raise TooFewNonzeroError(f"zero deletion needs >= 2 nonzero amplitudes, got {mask.popcount}")
    if len(mask) != state.dim:
        raise BadLengthError(f"mask length {len(mask)} != state dimension {state.dim}")
    return state.amplitudes[mask.bits]


def pair_product_invariant(v: np.ndarray, tol_pp: float = DEFAULT_TOL_PP) -> PairProductResult:
    """Check that all mirror-pair products agree at every power-of-two prefix length.

    For each level L = 4, 8, ..., K compares a_i * a_{L-1-i} against
    a_0 * a_{L-1} for i in [1, L/2 - 1]; length-2 prefixes hold trivially
    and the upper half of each level mirrors the lower.  Exactly K - k - 1
    comparisons of K - 2 products on a full pass.  Stops at the first
    violating level and reports it.
    """
    v = np.asarray(v, dtype=np.complex128)
    K = v.shape[0]
    if K < 2 or not _is_pow2(K):
        raise BadLengthError(f"vector length must be a power of two >= 2, got {K}")
    k = K.bit_length() - 1
    products = 0
    comparisons = 0
    for level in range(2, k + 1):
        L = 1 << level
        half = L >> 1
        prods = v[:half] * v[L - 1 : half - 1 : -1]
        products += half
        comparisons += half - 1
        ref = prods[0]
        diff = np.abs(prods[1:] - ref)
        scale = np.maximum(1.0, np.maximum(np.abs(prods[1:]), abs(ref)))
        bad = diff > tol_pp * scale
        if bad.any():
            i = int(np.argmax(bad)) + 1
            witness = PairProductWitness(
                level=level,
                index=i,
                ref_pair=(0, L - 1),
                bad_pair=(i, L - 1 - i),
                ref_product=complex(ref),
                bad_product=complex(prods[i]),
            )
            return PairProductResult(False, witness, comparisons, products)
    return PairProductResult(True, None, comparisons, products)


def extract_qubit_factors(
    state: PureState,
    tol_zero: float = DEFAULT_TOL_ZERO,
    tol_pp: float = DEFAULT_TOL_PP,
) -> list[QubitFactor]:
    """Peel off the n single-qubit factors of a fully separable state.

    Splits the vector into halves (the leading, most significant qubit).
    An all-zero half fixes the factor to a basis state; otherwise the two
    halves must be proportional, the ratio is taken at the first nonzero
    entry of the upper half, and the normalized (amp0, amp1) is divided
    out before recursing.  Each division keeps amp0 real positive, so the
    residual global phase accumulates on the undivided remainder; it is
    finally moved onto factor 0, making factors 1..n-1 have a real
    positive first nonzero amplitude and the reconstruction literal.

    Raises NotSeparableError when a proportionality check fails, which is
    what happens when the state does not pass the full-separability test.
    """
    vec = state.amplitudes
    raw: list[np.ndarray] = []
    for _ in range(state.n - 1):
        half = vec.shape[0] >> 1
        top, bot = vec[:half], vec[half:]
        top_mag, bot_mag = np.abs(top), np.abs(bot)
        if not (top_mag > tol_zero).any():
            raw.append(np.array([0.0, 1.0], dtype=np.complex128))
            vec = bot
            continue
        if not (bot_mag > tol_zero).any():
            raw.append(np.array([1.0, 0.0], dtype=np.complex128))
            vec = top
            continue
        j = int(np.argmax(top_mag > tol_zero))
        cross = np.abs(bot * top[j] - top * bot[j])
        scale = np.maximum(1.0, np.maximum(np.abs(bot * top[j]), np.abs(top * bot[j])))
        if (cross > tol_pp * scale).any():
            raise NotSeparableError("halves of the amplitude vector are not proportional")
        lam = bot[j] / top[j]
        a0 = 1.0 / np.sqrt(1.0 + abs(lam) ** 2)
        raw.append(np.array([a0, lam * a0], dtype=np.complex128))
        vec = top / a0
    raw.append(np.asarray(vec, dtype=np.complex128).copy())

    # Move the remainder's phase onto factor 0.
    last = raw[-1]
    lead = last[0] if abs(last[0]) > tol_zero else last[1]
    phase = lead / abs(lead)
    raw[-1] = last * np.conjugate(phase)
    raw[0] = raw[0] * phase
    return [QubitFactor(complex(f[0]), complex(f[1])) for f in raw]


def is_fully_separable(
    state: PureState,
    tol_zero: float = DEFAULT_TOL_ZERO,
    tol_pp: float = DEFAULT_TOL_PP,
) -> FullSepReport:
    """Decide full separability and construct the single-qubit factors when it holds.

    A single-support state is separable outright (TrivialBasisState).
    Otherwise the state is separable iff its support mask is well-formed
    and the zero-deleted amplitude vector is pair product invariant.
    """
    mask = amplitude_abstraction(state, tol_zero)
    K = mask.popcount
    if K == 0:
        # Unreachable for a normalized state; reject rather than recurse.
        return FullSepReport(False, Reason.WELL_FORMEDNESS_FAILED,
                             WellFormednessWitness(state.dim), None)
    if K == 1:
        factors = extract_qubit_factors(state, tol_zero, tol_pp)
        return FullSepReport(True, Reason.TRIVIAL_BASIS_STATE, None, tuple(factors))
    if not _is_pow2(K):
        return FullSepReport(False, Reason.WELL_FORMEDNESS_FAILED,
                             WellFormednessWitness(state.dim), None)
    wf = wf_zero_check(zero_indices(mask), state.dim)
    if not wf.well_formed:
        return FullSepReport(False, Reason.WELL_FORMEDNESS_FAILED,
                             WellFormednessWitness(wf.failed_block or state.dim), None,
                             wf_comparisons=wf.comparisons)
    ppr = pair_product_invariant(zero_deletion(state, mask), tol_pp)
    if not ppr.invariant:
        return FullSepReport(False, Reason.PAIR_PRODUCT_FAILED, ppr.witness, None,
                             products=ppr.products, pair_comparisons=ppr.comparisons,
                             wf_comparisons=wf.comparisons)
    factors = extract_qubit_factors(state, tol_zero, tol_pp)
    return FullSepReport(True, Reason.SEPARABLE, None, tuple(factors),
                         products=ppr.products, pair_comparisons=ppr.comparisons,
                         wf_comparisons=wf.comparisons)
