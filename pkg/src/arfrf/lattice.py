"""Degree map, kernel lattice V(S), RF-difference lattice W(S), RF relations,
and the genericity test for the defining toric ideal.

Lattices are canonicalized to a Hermite-form basis at construction, so
equality and index computations are decidable and deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch, NotSublattice
from .intmat import (
    bareiss_determinant,
    hermite_normal_form,
    hnf_contains,
    hnf_coordinates,
    kernel_basis,
)
from .rfmatrix import RFMatrix, iter_rf_matrices
from .semigroup import NumericalSemigroup


def degree(sg: NumericalSemigroup, vector: Sequence[int]) -> int:
    """Dot product with the minimal generators."""
    if len(vector) != sg.embedding_dimension:
        raise DimensionMismatch(
            f"vector length {len(vector)} != embedding dimension {sg.embedding_dimension}"
        )
    return sum(c * g for c, g in zip(vector, sg.generators))


@dataclass(frozen=True, slots=True, eq=False)
class IntegerLattice:
    """Finitely generated subgroup of Z^dim, with a canonical triangular basis."""

    dim: int
    generators: tuple[tuple[int, ...], ...]
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def from_generators(
        cls, vectors: Sequence[Sequence[int]], dim: int
    ) -> "IntegerLattice":
        gens = tuple(tuple(int(x) for x in v) for v in vectors)
        return cls(dim=dim, generators=gens, basis=hermite_normal_form(gens, dim))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, vector: Sequence[int]) -> bool:
        if len(vector) != self.dim:
            raise DimensionMismatch(f"vector length {len(vector)} != dim {self.dim}")
        return hnf_contains(self.basis, vector)

    __contains__ = contains

    def __eq__(self, other: object) -> bool:
        # equality of lattices, not of generating sets
        if not isinstance(other, IntegerLattice):
            return NotImplemented
        return self.dim == other.dim and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.dim, self.basis))


def kernel_lattice(sg: NumericalSemigroup) -> IntegerLattice:
    """V(S): the full integer kernel of the degree map, rank e - 1.

    The construction is saturated by design; any integer vector of degree 0
    lies in the span.
    """
    basis = kernel_basis(sg.generators)
    lattice = IntegerLattice(
        dim=sg.embedding_dimension, generators=basis, basis=basis
    )
    assert lattice.rank == sg.embedding_dimension - 1
    return lattice


def rf_difference_lattice(sg: NumericalSemigroup, matrix: RFMatrix) -> IntegerLattice:
    """W(S) for one RF matrix: the span of all pairwise row differences a_i - a_j.

    Every generator has degree 0 (rows share the degree f), which is exactly
    membership in V(S); verified here. Rows of an RF matrix are always
    distinct (the -1 diagonal), so no difference is the zero vector.
    """
    rows = matrix.entries
    e = len(rows)
    diffs = []
    for i in range(e):
        for j in range(i + 1, e):
            d = tuple(a - b for a, b in zip(rows[i], rows[j]))
            if degree(sg, d) != 0:  # pragma: no cover - structural impossibility
                raise AssertionError(f"row difference {d} has nonzero degree")
            assert any(d), "RF matrix rows cannot coincide"
            diffs.append(d)
    # the first-row differences already span the whole lattice
    # (a_i - a_j = (a_1 - a_j) - (a_1 - a_i)), which keeps the Hermite
    # reduction linear in e instead of quadratic
    basis = hermite_normal_form(diffs[: e - 1], e)
    return IntegerLattice(dim=e, generators=tuple(diffs), basis=basis)


def lattice_index(sub: IntegerLattice, ambient: IntegerLattice) -> int | None:
    """[ambient : sub], or None when the index is infinite (rank drop).

    Checks the sublattice relation, expresses sub's canonical basis in
    ambient's coordinates (an integer back-substitution against the
    triangular basis) and returns the absolute determinant of that
    change-of-basis matrix.
    """
    if sub.dim != ambient.dim:
        raise DimensionMismatch(f"dimensions differ: {sub.dim} != {ambient.dim}")
    coords = []
    for v in sub.generators:
        c = hnf_coordinates(ambient.basis, v)
        if c is None:
            raise NotSublattice(f"generator {v} lies outside the ambient lattice")
    for v in sub.basis:
        coords.append(hnf_coordinates(ambient.basis, v))
    if sub.rank < ambient.rank:
        return None
    return abs(bareiss_determinant(coords))


@dataclass(frozen=True, slots=True)
class Binomial:
    """x^plus - x^minus with disjoint supports and equal degrees.

    The plus side is the lexicographically larger exponent vector; that is the
    package-wide sign convention for rendering relations.
    """

    plus: tuple[int, ...]
    minus: tuple[int, ...]

    @property
    def support(self) -> frozenset[int]:
        return frozenset(
            i for i, (p, m) in enumerate(zip(self.plus, self.minus)) if p or m
        )

    def has_full_support(self) -> bool:
        return len(self.support) == len(self.plus)


def binomial_from_vector(vector: Sequence[int]) -> Binomial:
    """Split v into v+ / v- and orient by the lexicographic convention."""
    plus = tuple(x if x > 0 else 0 for x in vector)
    minus = tuple(-x if x < 0 else 0 for x in vector)
    if minus > plus:
        plus, minus = minus, plus
    return Binomial(plus=plus, minus=minus)


def rf_relations(sg: NumericalSemigroup, matrix: RFMatrix) -> list[Binomial]:
    """The e(e-1)/2 binomials built from pairwise RF row differences, ordered by (i, j)."""
    rows = matrix.entries
    e = len(rows)
    out = []
    for i in range(e):
        for j in range(i + 1, e):
            d = [a - b for a, b in zip(rows[i], rows[j])]
            b = binomial_from_vector(d)
            assert degree(sg, [p - m for p, m in zip(b.plus, b.minus)]) == 0
            out.append(b)
    return out


@dataclass(frozen=True, slots=True)
class GenericityReport:
    """Verdict of the RF-matrix genericity criterion with a re-checkable witness.

    ``generic`` is true iff every pseudo-Frobenius number has exactly one RF
    matrix and that matrix has pairwise-distinct entries within every column.
    On failure exactly one witness field is populated: either two distinct
    matrices for the same PF element, or (matrix, i, i', j) with equal entries
    in column j. Indices are 0-based.
    """

    generic: bool
    pf_checked: tuple[int, ...]
    nonunique: tuple[int, RFMatrix, RFMatrix] | None = None
    column_clash: tuple[int, RFMatrix, int, int, int] | None = None

    def describe(self) -> str:
        if self.generic:
            return "all criteria passed"
        if self.nonunique is not None:
            f = self.nonunique[0]
            return f"PF element {f} has more than one RF matrix"
        f, _, i, i2, j = self.column_clash
        return (
            f"unique RF matrix of PF element {f} repeats a value in column "
            f"{j + 1} (rows {i + 1} and {i2 + 1})"
        )


def is_generic(sg: NumericalSemigroup) -> GenericityReport:
    """Genericity of the defining toric ideal, decided from RF matrices."""
    pf = sg.pseudo_frobenius().elements
    for f in pf:
        found: list[RFMatrix] = []
        for matrix in iter_rf_matrices(sg, f):
            found.append(matrix)
            if len(found) == 2:
                return GenericityReport(
                    generic=False, pf_checked=pf, nonunique=(f, found[0], found[1])
                )
        matrix = found[0]
        e = matrix.size
        for j in range(e):
            for i in range(e):
                for i2 in range(i + 1, e):
                    if matrix.entries[i][j] == matrix.entries[i2][j]:
                        return GenericityReport(
                            generic=False,
                            pf_checked=pf,
                            column_clash=(f, matrix, i, i2, j),
                        )
    return GenericityReport(generic=True, pf_checked=pf)
