"""Exact graded dimension counts and additive bases for versal
characteristic-p commutative ring spectra."""

from .dyer_lashof import AdmissibleWord, enumerate_generators, generator_words
from .free_algebra import (
    EXTERIOR,
    POLYNOMIAL,
    Generator,
    GeneratorSet,
    Monomial,
    MonomialBasis,
    enumerate_monomials,
    series_of,
)
from .power_series import TruncatedSeries, product_over_generators
from .steenrod_dual import MilnorGenerator, milnor_generator_degrees, milnor_generators
from .versal import (
    CollisionWitness,
    HomotopyReport,
    Verdict,
    VerificationError,
    cotangent_series,
    equivalence_count,
    homology_series,
    homotopy_series,
    hz_quotient_comparison,
    selfmap_first_nontrivial,
    steenrod_series,
    structure_map_collision,
    taq_dimensions,
    thh_homology_series,
    verification_battery,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibleWord",
    "CollisionWitness",
    "EXTERIOR",
    "Generator",
    "GeneratorSet",
    "HomotopyReport",
    "MilnorGenerator",
    "Monomial",
    "MonomialBasis",
    "POLYNOMIAL",
    "TruncatedSeries",
    "Verdict",
    "VerificationError",
    "cotangent_series",
    "enumerate_generators",
    "enumerate_monomials",
    "equivalence_count",
    "generator_words",
    "homology_series",
    "homotopy_series",
    "hz_quotient_comparison",
    "milnor_generator_degrees",
    "milnor_generators",
    "product_over_generators",
    "selfmap_first_nontrivial",
    "series_of",
    "steenrod_series",
    "structure_map_collision",
    "taq_dimensions",
    "thh_homology_series",
    "verification_battery",
]
