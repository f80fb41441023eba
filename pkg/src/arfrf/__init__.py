"""Exact-arithmetic toolkit for numerical semigroups, row-factorization
matrices, integer lattices, and toric genericity checks."""

from .errors import (
    ArfrfError,
    DimensionMismatch,
    GridTooLarge,
    InvalidFamily,
    NotMember,
    NotNumerical,
    NotPseudoFrobenius,
    NotSublattice,
    TooManyMatrices,
    UnknownClaim,
)
from .factorization import Factorization, count_factorizations, factorizations
from .families import FamilySpec, build_family, closed_form_pf, closed_form_rf
from .lattice import (
    Binomial,
    GenericityReport,
    IntegerLattice,
    degree,
    is_generic,
    kernel_lattice,
    lattice_index,
    rf_difference_lattice,
    rf_relations,
)
from .rfmatrix import (
    RFMatrix,
    check_sign_conjecture,
    column_zero_pair,
    determinant,
    find_frobenius_det_witness,
    rf_matrices,
)
from .semigroup import NumericalSemigroup, PseudoFrobeniusSet, from_generators
from .verifier import VerifyConfig, verify_all, verify_claim

__version__ = "0.1.0"

__all__ = [
    "ArfrfError",
    "Binomial",
    "DimensionMismatch",
    "Factorization",
    "FamilySpec",
    "GenericityReport",
    "GridTooLarge",
    "IntegerLattice",
    "InvalidFamily",
    "NotMember",
    "NotNumerical",
    "NotPseudoFrobenius",
    "NotSublattice",
    "NumericalSemigroup",
    "PseudoFrobeniusSet",
    "RFMatrix",
    "TooManyMatrices",
    "UnknownClaim",
    "VerifyConfig",
    "build_family",
    "check_sign_conjecture",
    "closed_form_pf",
    "closed_form_rf",
    "column_zero_pair",
    "count_factorizations",
    "degree",
    "determinant",
    "factorizations",
    "find_frobenius_det_witness",
    "from_generators",
    "is_generic",
    "kernel_lattice",
    "lattice_index",
    "rf_difference_lattice",
    "rf_matrices",
    "rf_relations",
    "verify_all",
    "verify_claim",
    "__version__",
]
