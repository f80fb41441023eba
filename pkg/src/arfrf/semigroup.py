"""Numerical semigroups and their classical invariants, all in exact arithmetic.

A semigroup is built once from a generator set; after that every instance is
immutable and all queries are pure, so instances can be shared freely across
threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Iterator

from .errors import NotMember, NotNumerical


@dataclass(frozen=True, slots=True)
class PseudoFrobeniusSet:
    """Sorted pseudo-Frobenius numbers; the cardinality is the type t(S)."""

    elements: tuple[int, ...]

    @property
    def type_count(self) -> int:
        return len(self.elements)

    def __contains__(self, value: int) -> bool:
        return value in self.elements

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)


@dataclass(frozen=True, slots=True)
class NumericalSemigroup:
    """A numerical semigroup with its cached invariants.

    ``apery_table[i]`` is the least element congruent to i modulo the
    multiplicity; every membership question reduces to one table lookup.
    ``membership_bitmap`` covers [0, conductor + max generator] and exists only
    so tests can cross-check against independent oracles.
    """

    generators: tuple[int, ...]
    multiplicity: int = field(compare=False)
    embedding_dimension: int = field(compare=False)
    frobenius: int = field(compare=False)
    conductor: int = field(compare=False)
    apery_table: tuple[int, ...] = field(compare=False, repr=False)
    membership_bitmap: tuple[bool, ...] = field(compare=False, repr=False)

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.generators)) + ">"

    def contains(self, n: int) -> bool:
        """Membership via the Apéry table: n is in S iff n >= w(n mod m)."""
        if n < 0:
            return False
        return n >= self.apery_table[n % self.multiplicity]

    __contains__ = contains

    def genus(self) -> int:
        """Number of gaps, read off the Apéry table."""
        m = self.multiplicity
        return sum((w - i) // m for i, w in enumerate(self.apery_table))

    def small_elements(self) -> tuple[int, ...]:
        """All elements strictly below the conductor (empty only for S = N)."""
        return tuple(n for n in range(self.conductor) if self.contains(n))

    def apery_set(self, n: int) -> tuple[int, ...]:
        """Apéry set with respect to a nonzero element n, indexed by residue."""
        if n == 0 or not self.contains(n):
            raise NotMember(f"{n} is not a nonzero element of {self}")
        return _apery_by_residue(self.generators, n)

    def pseudo_frobenius(self) -> PseudoFrobeniusSet:
        """PF(S) from the maximal Apéry elements under the order w <= w' iff w' - w in S."""
        if self.multiplicity == 1:
            # S = N: PF is empty by convention
            return PseudoFrobeniusSet(())
        ap = self.apery_table
        maximal = [
            w
            for w in ap
            if not any(w2 != w and self.contains(w2 - w) for w2 in ap)
        ]
        return PseudoFrobeniusSet(tuple(sorted(w - self.multiplicity for w in maximal)))

    def is_med(self) -> bool:
        """Maximal embedding dimension: e(S) == m(S)."""
        by_count = self.embedding_dimension == self.multiplicity
        by_apery = set(self.apery_table) == {0, *self.generators[1:]}
        if by_count != by_apery:  # pragma: no cover - internal consistency
            raise AssertionError(f"MED characterizations disagree for {self}")
        return by_count

    def is_arf(self) -> bool:
        """Closed under x, y -> 2x - y for y <= x; pairs above the conductor are automatic."""
        smalls = self.small_elements()
        for xi, x in enumerate(smalls):
            for y in smalls[: xi + 1]:
                if not self.contains(2 * x - y):
                    return False
        return True

    def arf_closure(self) -> "NumericalSemigroup":
        """Smallest Arf numerical semigroup containing this one.

        Fixpoint iteration: adjoin every missing 2x - y (y <= x below the
        current conductor) and rebuild. Each pass removes at least one gap, so
        the loop terminates.
        """
        current = self
        while True:
            smalls = current.small_elements()
            missing = set()
            for xi, x in enumerate(smalls):
                for y in smalls[: xi + 1]:
                    z = 2 * x - y
                    if not current.contains(z):
                        missing.add(z)
            if not missing:
                return current
            current = from_generators(current.generators + tuple(missing))


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """Construct the numerical semigroup generated by ``gens``.

    The input may be unsorted and contain duplicates or redundant generators;
    it is canonicalized to the unique minimal system. Raises NotNumerical when
    the gcd is not 1.
    """
    cleaned = sorted(set(int(g) for g in gens))
    if not cleaned:
        raise ValueError("generator set must be non-empty")
    if cleaned[0] < 1:
        raise ValueError(f"generators must be positive integers, got {cleaned[0]}")
    g = 0
    for x in cleaned:
        g = gcd(g, x)
    if g != 1:
        raise NotNumerical(cleaned, g)

    minimal = _minimal_system(cleaned)
    m = minimal[0]
    apery = _apery_by_residue(minimal, m)
    frobenius = max(apery) - m  # equals -1 for S = N
    conductor = frobenius + 1

    bound = conductor + minimal[-1]
    bitmap = tuple(n >= apery[n % m] for n in range(bound + 1))

    sg = NumericalSemigroup(
        generators=minimal,
        multiplicity=m,
        embedding_dimension=len(minimal),
        frobenius=frobenius,
        conductor=conductor,
        apery_table=apery,
        membership_bitmap=bitmap,
    )
    if sg.embedding_dimension > sg.multiplicity:  # pragma: no cover
        raise AssertionError(f"e(S) > m(S) for {sg}; construction bug")
    return sg


def _minimal_system(gens: list[int]) -> tuple[int, ...]:
    """(S \\ {0}) minus sums of two nonzero elements, restricted to the input."""
    if gens[0] == 1:
        return (1,)
    top = gens[-1]
    member = [False] * (top + 1)
    member[0] = True
    for v in range(1, top + 1):
        for g in gens:
            if g > v:
                break
            if member[v - g]:
                member[v] = True
                break
    out = []
    for g in gens:
        decomposable = any(
            member[a] and member[g - a] for a in range(gens[0], g - gens[0] + 1)
        )
        if not decomposable:
            out.append(g)
    return tuple(out)


def _apery_by_residue(gens: tuple[int, ...] | list[int], n: int) -> tuple[int, ...]:
    """Least element of <gens> in each residue class mod n, by round-robin relaxation."""
    INF = None
    dist: list[int | None] = [INF] * n
    dist[0] = 0
    changed = True
    while changed:
        changed = False
        for r in range(n):
            d = dist[r]
            if d is None:
                continue
            for g in gens:
                nd = d + g
                r2 = nd % n
                if dist[r2] is None or nd < dist[r2]:
                    dist[r2] = nd
                    changed = True
    # gcd(gens) = 1 and n in <gens> guarantee every class is reached
    return tuple(dist)  # type: ignore[arg-type]
