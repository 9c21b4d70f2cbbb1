"""Entanglement detection for three-qubit density matrices via six two-qubit reductions."""
from ._backend import BACKEND
from .criterion import (
    EntanglementReport,
    PairDecomposition,
    ReductionKind,
    Verdict,
    entanglement_criterion,
    ppt_min_eigenvalue,
    product_factorization,
    pure_pair_decomposition,
    reduce,
    special_reduction,
)
from .errors import (
    ConvergenceError,
    InvalidInput,
    InvalidSlot,
    LemmaViolation,
    NonHermitian,
    NotNormalized,
    ParamOutOfRange,
    TripartiteError,
)
from .linalg import (
    DensityCheck,
    hermitian_eigenvalues,
    is_density_matrix,
    kron,
    partial_trace,
    partial_transpose_second,
)
from .states import (
    MoleculeParams,
    ProductPureState,
    SeparableEnsemble,
    embed_bipartite,
    ghz,
    molecule_state,
    product_pure,
    pure_to_density,
    random_density,
    random_separable,
    upb_state,
    werner_embedded,
    werner_state,
)

__version__ = "0.1.0"
