"""Separability tests and tensor factorization for pure n-qubit statevectors.

Given the 2**n complex amplitudes of a pure state, this package decides
whether the state is a tensor product of n single-qubit states (full
separability), whether it splits after any chosen qubit count or qubit
subset (p-q separability), constructs the factors whenever a test
succeeds, and searches all qubit subsets for the finest factorization.
The decision procedures run in time linear in the number of amplitudes;
an independent rank-1 reshape oracle is included for cross-checking.
"""
from .decomposition import (
    N_MAX_DECOMPOSE,
    FactorBlock,
    FactorTree,
    count_bipartitions,
    decompose,
)
from .errors import (
    AllZeroError,
    BadLengthError,
    BadPermutationError,
    BadSplitError,
    LengthMismatchError,
    NotNormalizedError,
    NotSeparableError,
    QsepError,
    TooFewNonzeroError,
    TooLargeError,
)
from .fullsep import (
    DEFAULT_TOL_PP,
    DEFAULT_TOL_ZERO,
    N_MAX_ENUM,
    FullSepReport,
    PairProductResult,
    PairProductWitness,
    Reason,
    SupportMask,
    WellFormednessWitness,
    amplitude_abstraction,
    enumerate_well_formed,
    extract_qubit_factors,
    is_fully_separable,
    is_well_formed_mask,
    pair_product_invariant,
    wf_zero_check,
    zero_deletion,
    zero_indices,
)
from .oracle import DEFAULT_TOL_RANK, oracle_fully_separable, oracle_pq, reshape_matrix
from .pqsep import (
    CrossProductWitness,
    Pivot,
    PqReport,
    ZeroPatternWitness,
    factor_pq,
    find_pivot,
    is_pq_separable,
    is_pq_separable_subset,
    subset_permutation,
)
from .state import (
    DEFAULT_TOL_NORM,
    PureState,
    QubitFactor,
    QubitPermutation,
    make_state,
    permute_qubits,
    random_structured_state,
    tensor,
    tensor_all,
)

__version__ = "0.1.0"

__all__ = [
    "AllZeroError",
    "BadLengthError",
    "BadPermutationError",
    "BadSplitError",
    "CrossProductWitness",
    "DEFAULT_TOL_NORM",
    "DEFAULT_TOL_PP",
    "DEFAULT_TOL_RANK",
    "DEFAULT_TOL_ZERO",
    "FactorBlock",
    "FactorTree",
    "FullSepReport",
    "LengthMismatchError",
    "N_MAX_DECOMPOSE",
    "N_MAX_ENUM",
    "NotNormalizedError",
    "NotSeparableError",
    "PairProductResult",
    "PairProductWitness",
    "Pivot",
    "PqReport",
    "PureState",
    "QsepError",
    "QubitFactor",
    "QubitPermutation",
    "Reason",
    "SupportMask",
    "TooFewNonzeroError",
    "TooLargeError",
    "WellFormednessWitness",
    "ZeroPatternWitness",
    "amplitude_abstraction",
    "count_bipartitions",
    "decompose",
    "enumerate_well_formed",
    "extract_qubit_factors",
    "factor_pq",
    "find_pivot",
    "is_fully_separable",
    "is_pq_separable",
    "is_pq_separable_subset",
    "is_well_formed_mask",
    "make_state",
    "oracle_fully_separable",
    "oracle_pq",
    "pair_product_invariant",
    "permute_qubits",
    "random_structured_state",
    "reshape_matrix",
    "subset_permutation",
    "tensor",
    "tensor_all",
    "wf_zero_check",
    "zero_deletion",
    "zero_indices",
]
