"""Admissible Dyer-Lashof words over a single class of given degree.

Words act on a class of degree n.  The admissible words of excess
strictly greater than n, together with the empty word for the class
itself, freely generate the target algebra; words of excess exactly n
give p-th powers and reappear as monomials, not generators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .free_algebra import EXTERIOR, POLYNOMIAL, Generator, GeneratorSet
from .primes import require_prime


@dataclass(frozen=True)
class AdmissibleWord:
    """For p = 2 the entries are positive integers i_1..i_k with
    i_j <= 2 i_{j+1}; for odd p they are pairs (eps_j, s_j) with eps in
    {0, 1}, s_j >= 1 and s_j <= p*s_{j+1} - eps_{j+1}.  The empty word is
    the identity.

    >>> AdmissibleWord(2, (4, 2)).render()
    'Q^4 Q^2 a'
    >>> AdmissibleWord(3, ((1, 2),)).render()
    'bQ^2 a'
    """

    prime: int
    entries: tuple

    def __post_init__(self) -> None:
        require_prime(self.prime)
        entries = tuple(self.entries)
        if self.prime == 2:
            for i in entries:
                if not isinstance(i, int) or i < 1:
                    raise ValueError(f"p=2 entries must be positive integers, got {i!r}")
            for j in range(len(entries) - 1):
                if entries[j] > 2 * entries[j + 1]:
                    raise ValueError(f"inadmissible word {entries}")
        else:
            entries = tuple((eps, s) for eps, s in entries)
            for eps, s in entries:
                if eps not in (0, 1) or s < 1:
                    raise ValueError(f"bad odd-prime entry ({eps}, {s})")
            for j in range(len(entries) - 1):
                if entries[j][1] > self.prime * entries[j + 1][1] - entries[j + 1][0]:
                    raise ValueError(f"inadmissible word {entries}")
        object.__setattr__(self, "entries", entries)

    @property
    def word_degree(self) -> int:
        if self.prime == 2:
            return sum(self.entries)
        return sum(2 * s * (self.prime - 1) - eps for eps, s in self.entries)

    @property
    def excess(self) -> "int | float":
        """Empty word has excess +infinity by convention."""
        if not self.entries:
            return math.inf
        if self.prime == 2:
            return 2 * self.entries[0] - sum(self.entries)
        head = 2 * self.entries[0][1]
        tail = sum(2 * s * (self.prime - 1) + eps for eps, s in self.entries[1:])
        return head - tail

    def degree(self, gen_degree: int) -> int:
        """Degree of the word applied to a class of degree ``gen_degree``."""
        return gen_degree + self.word_degree

    def render(self, symbol: str = "a") -> str:
        if not self.entries:
            return symbol
        if self.prime == 2:
            ops = [f"Q^{i}" for i in self.entries]
        else:
            ops = [("bQ^" if eps else "Q^") + str(s) for eps, s in self.entries]
        return " ".join(ops) + " " + symbol


def _generator_words_p2(n: int, budget: int) -> list[tuple]:
    """All admissible p=2 words of excess > n and word degree <= budget.

    Tails of qualifying words qualify: 2*i_1 > sum + n and i_1 <= 2*i_2
    force 2*i_2 - (sum - i_1) > n.  So the search extends qualifying words
    on the left only, which makes it output-linear.  A left extension i_0
    of a word with sum S needs i_0 >= S + n + 1 (excess), i_0 <= 2*first
    (admissibility) and S + i_0 <= budget.
    """
    found: list[tuple] = []

    def extend(word: tuple, total: int) -> None:
        found.append(word)
        top = min(2 * word[0], budget - total)
        for i0 in range(total + n + 1, top + 1):
            extend((i0,) + word, total + i0)

    for i in range(n + 1, budget + 1):
        extend((i,), i)
    return found


def _generator_words_odd(p: int, n: int, budget: int) -> list[tuple]:
    """Odd-p analogue of the excess-closed left-extension search.

    For the excess of an extension only the tail sum T = sum of
    (2*s_j*(p-1) + eps_j) matters: the new head (eps_0, s_0) needs
    2*s_0 - T > n, plus admissibility s_0 <= p*s_1 - eps_1 and the
    degree budget.
    """
    found: list[tuple] = []

    def word_contrib(eps: int, s: int) -> int:
        return 2 * s * (p - 1) - eps

    def extend(word: tuple, wdeg: int, tail_t: int) -> None:
        found.append(word)
        eps1, s1 = word[0]
        t = tail_t + 2 * s1 * (p - 1) + eps1
        s_lo = (t + n) // 2 + 1
        s_hi = p * s1 - eps1
        for eps0 in (0, 1):
            for s0 in range(s_lo, s_hi + 1):
                c = word_contrib(eps0, s0)
                if wdeg + c > budget:
                    break
                extend(((eps0, s0),) + word, wdeg + c, t)

    for eps in (0, 1):
        s = n // 2 + 1
        while word_contrib(eps, s) <= budget:
            extend(((eps, s),), word_contrib(eps, s), 0)
            s += 1
    return found


def generator_words(p: int, gen_degree: int, max_degree: int) -> tuple[AdmissibleWord, ...]:
    """Empty word plus every admissible word with excess > gen_degree and
    total degree <= max_degree, sorted by (total degree, entries)."""
    require_prime(p)
    if gen_degree < 1:
        raise ValueError(f"generator degree must be >= 1, got {gen_degree}")
    if max_degree < 0:
        raise ValueError(f"max degree must be >= 0, got {max_degree}")
    words: list[AdmissibleWord] = []
    if gen_degree <= max_degree:
        words.append(AdmissibleWord(p, ()))
        budget = max_degree - gen_degree
        raw = _generator_words_p2(gen_degree, budget) if p == 2 else (
            _generator_words_odd(p, gen_degree, budget))
        words.extend(AdmissibleWord(p, w) for w in raw)
    words.sort(key=lambda w: (w.degree(gen_degree), w.entries))
    return tuple(words)


def enumerate_generators(
    p: int, gen_degree: int, max_degree: int, symbol: str = "a"
) -> GeneratorSet:
    """Free-algebra generator set over one class of degree ``gen_degree``.

    Kind is polynomial at p = 2; at odd primes it follows the parity of
    the total degree.  Labels are the rendered words applied to
    ``symbol``.
    """
    gens = []
    for w in generator_words(p, gen_degree, max_degree):
        d = w.degree(gen_degree)
        if p == 2:
            kind = POLYNOMIAL
        else:
            kind = EXTERIOR if d % 2 else POLYNOMIAL
        gens.append(Generator(w.render(symbol), d, kind))
    return GeneratorSet(tuple(gens))
