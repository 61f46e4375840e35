"""Free graded-commutative algebras presented by generators with kinds.

A generator is either polynomial (even-degree behaviour, unbounded
exponents) or exterior (square zero, exponent at most 1).  The additive
basis of the free algebra on a generator set is the set of monomials
respecting the exterior bound; its generating function is the product of
the per-generator factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .power_series import TruncatedSeries, product_over_generators

POLYNOMIAL = "polynomial"
EXTERIOR = "exterior"
KINDS = (POLYNOMIAL, EXTERIOR)


@dataclass(frozen=True)
class Generator:
    label: str
    degree: int
    kind: str

    def __post_init__(self) -> None:
        if not self.label:
            raise ValueError("generator label must be nonempty")
        if self.degree < 1:
            raise ValueError(f"generator degree must be >= 1, got {self.degree}")
        if self.kind not in KINDS:
            raise ValueError(f"generator kind must be one of {KINDS}, got {self.kind!r}")


def _generator_key(g: Generator) -> tuple[int, str]:
    return (g.degree, g.label)


@dataclass(frozen=True)
class GeneratorSet:
    """Canonically ordered by (degree, label); labels must be distinct."""

    entries: tuple[Generator, ...]

    def __post_init__(self) -> None:
        entries = tuple(sorted(self.entries, key=_generator_key))
        object.__setattr__(self, "entries", entries)
        seen: set[str] = set()
        for g in entries:
            if g.label in seen:
                raise ValueError(f"duplicate generator label {g.label!r}")
            seen.add(g.label)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def merged(self, other: "GeneratorSet") -> "GeneratorSet":
        return GeneratorSet(self.entries + other.entries)


@dataclass(frozen=True)
class Monomial:
    """Product of generator powers; factors in (degree, label) order.

    The empty monomial is the algebra unit and renders as "1".
    """

    factors: tuple[tuple[Generator, int], ...]

    def __post_init__(self) -> None:
        last = None
        for g, e in self.factors:
            if e < 1:
                raise ValueError("monomial exponents must be >= 1")
            if g.kind == EXTERIOR and e > 1:
                raise ValueError(f"exterior generator {g.label!r} squares to zero")
            key = _generator_key(g)
            if last is not None and key <= last:
                raise ValueError("monomial factors must be strictly (degree, label) ordered")
            last = key

    @property
    def degree(self) -> int:
        return sum(e * g.degree for g, e in self.factors)

    def exponent(self, label: str) -> int:
        for g, e in self.factors:
            if g.label == label:
                return e
        return 0

    def render(self) -> str:
        if not self.factors:
            return "1"
        parts = []
        for g, e in self.factors:
            if e == 1:
                parts.append(g.label)
            elif " " in g.label:
                parts.append(f"({g.label})^{e}")
            else:
                parts.append(f"{g.label}^{e}")
        return "·".join(parts)

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class MonomialBasis:
    generators: GeneratorSet
    truncation_degree: int
    buckets: tuple[tuple[Monomial, ...], ...]

    def bucket(self, degree: int) -> tuple[Monomial, ...]:
        return self.buckets[degree]

    def dimensions(self) -> list[int]:
        return [len(b) for b in self.buckets]

    def dimension_series(self) -> TruncatedSeries:
        return TruncatedSeries(self.truncation_degree, tuple(self.dimensions()))


def series_of(gens: GeneratorSet, truncation_degree: int) -> TruncatedSeries:
    """Generating function of the monomial basis, degree by degree."""
    return product_over_generators(gens, truncation_degree)


def enumerate_monomials(gens: GeneratorSet, truncation_degree: int) -> MonomialBasis:
    """Complete additive basis in degrees 0..N, bucketed by degree.

    Within a degree, monomials appear in descending lexicographic order of
    their exponent vectors over the canonical generator order, so pure
    powers of the lowest generator come first.
    """
    if not isinstance(gens, GeneratorSet):
        gens = GeneratorSet(tuple(gens))
    n = truncation_degree
    glist = gens.entries
    k = len(glist)
    # cheapest degree still available from position i on, for pruning
    min_rest = [n + 1] * (k + 1)
    for i in range(k - 1, -1, -1):
        min_rest[i] = min(min_rest[i + 1], glist[i].degree)
    buckets: list[list[Monomial]] = [[] for _ in range(n + 1)]

    def descend(i: int, used: int, factors: list[tuple[Generator, int]]) -> None:
        if i == k or n - used < min_rest[i]:
            buckets[used].append(Monomial(tuple(factors)))
            return
        g = glist[i]
        top = (n - used) // g.degree
        if g.kind == EXTERIOR:
            top = min(top, 1)
        for e in range(top, 0, -1):
            factors.append((g, e))
            descend(i + 1, used + e * g.degree, factors)
            factors.pop()
        descend(i + 1, used, factors)

    descend(0, 0, [])
    return MonomialBasis(gens, n, tuple(tuple(b) for b in buckets))
