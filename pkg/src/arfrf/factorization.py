"""Enumerating representations of an integer over the minimal generators.

The enumerator is a pruned depth-first search; its companion counter is an
independent coin-counting dynamic program used to cross-check it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .semigroup import NumericalSemigroup


@dataclass(frozen=True, slots=True)
class Factorization:
    """A vector of multiplicities c with sum(c[j] * n_j) == value."""

    coefficients: tuple[int, ...]
    value: int


def factorization_vectors(
    sg: NumericalSemigroup, value: int, excluded: int | None = None
) -> list[tuple[int, ...]]:
    """All coefficient vectors representing ``value``, largest-first.

    The list is complete, duplicate-free and ordered by lexicographically
    decreasing coefficients (the search tries the largest multiple of each
    generator first). ``excluded`` pins one coordinate to zero without
    changing the vector length.
    """
    if value < 0:
        raise ValueError(f"cannot factor a negative value: {value}")
    gens = sg.generators
    e = len(gens)
    if excluded is not None and not 0 <= excluded < e:
        raise ValueError(f"excluded index {excluded} out of range for e={e}")
    out: list[tuple[int, ...]] = []
    coeffs = [0] * e

    def descend(idx: int, rem: int) -> None:
        if idx == e - 1:
            if idx == excluded:
                if rem == 0:
                    out.append(tuple(coeffs))
                return
            q, r = divmod(rem, gens[idx])
            if r == 0:
                coeffs[idx] = q
                out.append(tuple(coeffs))
                coeffs[idx] = 0
            return
        if idx == excluded:
            descend(idx + 1, rem)
            return
        g = gens[idx]
        for c in range(rem // g, -1, -1):
            coeffs[idx] = c
            descend(idx + 1, rem - c * g)
        coeffs[idx] = 0

    descend(0, value)
    return out


def factorizations(
    sg: NumericalSemigroup, value: int, excluded: int | None = None
) -> list[Factorization]:
    """Factorization objects for every representation of ``value``; see
    :func:`factorization_vectors` for ordering and the exclusion mechanism."""
    return [Factorization(v, value) for v in factorization_vectors(sg, value, excluded)]


def count_factorizations(sg: NumericalSemigroup, value: int) -> int:
    """Denumerant of ``value`` by an independent dynamic program.

    Deliberately shares no code with the enumerator so the two can vouch for
    each other in tests.
    """
    if value < 0:
        raise ValueError(f"cannot count factorizations of a negative value: {value}")
    ways = [0] * (value + 1)
    ways[0] = 1
    for g in sg.generators:
        for v in range(g, value + 1):
            ways[v] += ways[v - g]
    return ways[value]
