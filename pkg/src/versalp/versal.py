"""Verifiable reports on the versal characteristic-p commutative ring spectrum.

The mod-p homology is the free algebra over the Dyer-Lashof algebra on one
class of degree 1; dividing its dimension series by that of the dual
Steenrod algebra yields the homotopy dimension series.  Derived reports
cover topological Hochschild homology, topological Andre-Quillen homology,
the equivalence count, the comparison with the ordinary quotient over the
integers, and the bordism structure-map collision at p = 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dyer_lashof import enumerate_generators
from .free_algebra import GeneratorSet, Monomial, enumerate_monomials, series_of
from .power_series import TruncatedSeries
from .primes import require_prime
from .steenrod_dual import milnor_generator_degrees

# Homotopy entries are F_p dimensions; reading the degree-n entry as the
# n-th homotopy group relies on the additive splitting into graded
# Eilenberg-Mac Lane pieces, which holds here but is not recomputed.
SPLITTING_ASSUMPTION = (
    "series entries are F_p dimensions; identifying them with homotopy groups "
    "uses the additive graded Eilenberg-Mac Lane splitting"
)

# Tor over Z of Z/p with itself has dimension 1 in homological degrees 0
# and 1 and vanishes above; as a dimension sequence that is [1, 1, 0, ...].
TOR_ASSUMPTION = (
    "comparison target is the two-term Tor dimension sequence [1, 1, 0, ...]"
)


class VerificationError(Exception):
    """A mathematical consistency check failed; no report may be emitted."""


def homology_series(p: int, max_degree: int) -> TruncatedSeries:
    """Mod-p homology dimension series, free over the Dyer-Lashof algebra
    on one degree-1 class."""
    return series_of(enumerate_generators(p, 1, max_degree), max_degree)


def steenrod_series(p: int, max_degree: int) -> TruncatedSeries:
    """Dimension series of the mod-p dual Steenrod algebra."""
    return series_of(milnor_generator_degrees(p, max_degree), max_degree)


@dataclass(frozen=True)
class HomotopyReport:
    prime: int
    truncation_degree: int
    homology_series: TruncatedSeries
    steenrod_series: TruncatedSeries
    homotopy_series: TruncatedSeries
    gap_verified: bool
    first_positive_nonzero_degree: "int | None"


def homotopy_series(p: int, max_degree: int) -> HomotopyReport:
    """Homotopy dimension series as the quotient homology / dual Steenrod.

    The quotient is checked for nonnegativity and multiplied back against
    the denominator; ``gap_verified`` records whether the coefficients are
    1 at degree 0, vanish strictly between 0 and 4(p-1), and equal 1 at
    4(p-1) when that degree is in range.
    """
    hom = homology_series(p, max_degree)
    ste = steenrod_series(p, max_degree)
    quo = hom.div(ste)
    for d, c in enumerate(quo.coefficients):
        if c < 0:
            raise VerificationError(
                f"negative homotopy dimension {c} in degree {d} at p={p}"
            )
    if quo.mul(ste) != hom:
        raise VerificationError(
            f"tensor identity failed at p={p}: homotopy * steenrod != homology"
        )
    top = 4 * (p - 1)
    gap = quo.coefficients[0] == 1
    gap = gap and all(
        quo.coefficients[d] == 0 for d in range(1, min(top, max_degree + 1))
    )
    if max_degree >= top:
        gap = gap and quo.coefficients[top] == 1
    first = next(
        (d for d in range(1, max_degree + 1) if quo.coefficients[d]), None
    )
    return HomotopyReport(p, max_degree, hom, ste, quo, gap, first)


def selfmap_first_nontrivial(p: int) -> int:
    """Dimension of the first nontrivial homotopy of the self-map space,
    one below the first positive-degree class; computed from the series."""
    report = homotopy_series(p, 4 * (p - 1))
    if report.first_positive_nonzero_degree is None:
        raise VerificationError(
            f"no nonzero positive coefficient up to degree {4 * (p - 1)} at p={p}"
        )
    return report.first_positive_nonzero_degree - 1


def equivalence_count(p: int) -> int:
    """Number of homotopy classes of equivalences, p - 1; valid only while
    the degree-1 homology is one-dimensional, so that is checked first."""
    require_prime(p)
    h1 = homology_series(p, 1).coefficient(1)
    if h1 != 1:
        raise VerificationError(
            f"H_1 dimension is {h1}, not 1; the p - 1 count does not apply"
        )
    return p - 1


def thh_homology_series(p: int, max_degree: int) -> TruncatedSeries:
    """Mod-p homology series of topological Hochschild homology: the base
    series times the free algebra on one degree-2 class (the unreduced
    series of the basepoint-adjoined free infinite loop space on S^2)."""
    loop_factor = series_of(
        enumerate_generators(p, 2, max_degree, symbol="b"), max_degree
    )
    return homology_series(p, max_degree).mul(loop_factor)


def taq_dimensions(p: int, max_degree: int) -> TruncatedSeries:
    """Topological Andre-Quillen homology dimensions: a single 1 in
    degree 1."""
    require_prime(p)
    coeffs = [0] * (max_degree + 1)
    if max_degree >= 1:
        coeffs[1] = 1
    return TruncatedSeries(max_degree, tuple(coeffs))


def cotangent_series(p: int, max_degree: int) -> TruncatedSeries:
    """Dimension series of the cotangent complex: the homotopy series
    shifted up one degree (suspension)."""
    h = homotopy_series(p, max_degree).homotopy_series
    return TruncatedSeries(max_degree, (0,) + h.coefficients[:max_degree])


def tor_series(max_degree: int) -> TruncatedSeries:
    return TruncatedSeries.from_coefficients((1, 1), max_degree)


def hz_quotient_comparison(p: int, max_degree: int) -> int:
    """First degree where the homology series differs from the Tor
    dimension sequence of the ordinary quotient over the integers."""
    require_prime(p)
    if max_degree < 2 * p - 2:
        raise ValueError(
            f"max degree {max_degree} too small, need at least {2 * p - 2}"
        )
    hom = homology_series(p, max_degree)
    tor = tor_series(max_degree)
    for d in range(max_degree + 1):
        if hom.coefficient(d) != tor.coefficient(d):
            return d
    raise ValueError(f"series agree up to degree {max_degree}; bound too small")


@dataclass(frozen=True)
class CollisionWitness:
    source_monomials: tuple[Monomial, Monomial]
    image: str

    def __post_init__(self) -> None:
        first, second = self.source_monomials
        if first == second:
            raise ValueError("collision sources must be distinct")
        if first.degree != 4 or second.degree != 4:
            raise ValueError("collision sources must live in degree 4")


# Stored relations for the structure map to unoriented bordism at p = 2:
# the degree-1 class maps to e_1, and Q^3 e_1 = e_1^4 in the target; both
# extend multiplicatively, so an image is a power of e_1.
_IMAGE_E1_EXPONENT = {"a": 1, "Q^3 a": 4}


def _bordism_image(m: Monomial) -> str:
    exponent = 0
    for g, e in m.factors:
        if g.label not in _IMAGE_E1_EXPONENT:
            raise VerificationError(f"no stored relation for {g.label!r}")
        exponent += e * _IMAGE_E1_EXPONENT[g.label]
    return "e_1" if exponent == 1 else f"e_1^{exponent}"


def structure_map_collision() -> CollisionWitness:
    """Two distinct degree-4 basis monomials at p = 2 with the same image
    under the structure map to unoriented bordism."""
    basis = enumerate_monomials(enumerate_generators(2, 1, 4), 4)
    by_rendering = {m.render(): m for m in basis.bucket(4)}
    q3a = by_rendering.get("Q^3 a")
    a4 = by_rendering.get("a^4")
    if q3a is None or a4 is None:
        raise VerificationError(
            f"degree-4 basis {sorted(by_rendering)} lacks an expected monomial"
        )
    image_q3a = _bordism_image(q3a)
    image_a4 = _bordism_image(a4)
    if image_q3a != image_a4:
        raise VerificationError(
            f"images disagree: {image_q3a} vs {image_a4}"
        )
    return CollisionWitness((q3a, a4), image_q3a)


@dataclass(frozen=True)
class Verdict:
    name: str
    passed: bool
    detail: str = ""


def _verdict_from(name: str, thunk) -> Verdict:
    try:
        passed, detail = thunk()
    except (VerificationError, ValueError) as exc:
        return Verdict(name, False, str(exc))
    return Verdict(name, passed, detail)


def verification_battery(p: int, max_degree: int) -> tuple[Verdict, ...]:
    """Every per-prime consistency check, as named verdicts.

    Fixed-scale checks (self-map degree, equivalence count) run at their
    own canonical scales; the basis/series and tensor-enumeration oracles
    are capped to keep the battery fast at large degree bounds.
    """
    require_prime(p)
    if max_degree < 0:
        raise ValueError(f"max degree must be >= 0, got {max_degree}")
    checks: list[Verdict] = []

    hom = homology_series(p, max_degree)
    ste = steenrod_series(p, max_degree)
    quo = hom.div(ste)

    checks.append(
        Verdict(
            "nonnegativity",
            all(c >= 0 for c in quo.coefficients),
            f"min coefficient {min(quo.coefficients)}",
        )
    )
    checks.append(
        Verdict(
            "tensor_identity",
            quo.mul(ste) == hom,
            "homotopy * steenrod == homology",
        )
    )

    def gap_check():
        report = homotopy_series(p, max_degree)
        return report.gap_verified, f"checked through degree {max_degree}"

    checks.append(_verdict_from("gap", gap_check))

    def h1_check():
        h1 = homology_series(p, 1).coefficient(1)
        return h1 == 1, f"H_1 dimension {h1}"

    checks.append(_verdict_from("h1_dimension", h1_check))

    def equivalence_check():
        count = equivalence_count(p)
        return count == p - 1, f"count {count}"

    checks.append(_verdict_from("equivalence_count", equivalence_check))

    def selfmap_check():
        d = selfmap_first_nontrivial(p)
        return d == 4 * p - 5, f"degree {d}"

    checks.append(_verdict_from("selfmap_degree", selfmap_check))

    def hz_check():
        bound = max(max_degree, 2 * p - 2)
        d = hz_quotient_comparison(p, bound)
        expected = 2 if p == 2 else 2 * p - 2
        return d == expected, f"first difference at degree {d}"

    checks.append(_verdict_from("hz_first_difference", hz_check))

    def taq_check():
        bound = max(max_degree, 1)
        taq = taq_dimensions(p, bound).coefficients
        ok = taq[1] == 1 and sum(taq) == 1
        return ok, "single 1 in degree 1"

    checks.append(_verdict_from("taq_dimensions", taq_check))

    def cotangent_check():
        shifted = cotangent_series(p, max_degree)
        expected = (0,) + quo.coefficients[: max_degree]
        return shifted.coefficients == expected, "equals t * homotopy"

    checks.append(_verdict_from("cotangent_shift", cotangent_check))

    def basis_check():
        bound = min(max_degree, 20)
        gens = enumerate_generators(p, 1, bound)
        dims = enumerate_monomials(gens, bound).dimensions()
        ok = dims == list(series_of(gens, bound).coefficients)
        return ok, f"monomial counts match series through degree {bound}"

    checks.append(_verdict_from("basis_series_agreement", basis_check))

    def thh_check():
        bound = min(max_degree, 10)
        fast = thh_homology_series(p, bound)
        merged = enumerate_generators(p, 1, bound).merged(
            enumerate_generators(p, 2, bound, symbol="b")
        )
        dims = enumerate_monomials(merged, bound).dimensions()
        ok = dims == list(fast.coefficients)
        return ok, f"tensor enumeration matches through degree {bound}"

    checks.append(_verdict_from("thh_tensor", thh_check))

    if p == 2:

        def collision_check():
            witness = structure_map_collision()
            sources = {m.render() for m in witness.source_monomials}
            ok = sources == {"Q^3 a", "a^4"} and witness.image == "e_1^4"
            return ok, f"{sorted(sources)} -> {witness.image}"

        checks.append(_verdict_from("collision_witness", collision_check))

    return tuple(checks)
