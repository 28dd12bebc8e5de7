"""ramforge: exact ramification analysis of rational covers of the
projective line over finite fields, with constructive Belyi-type towers
and a characteristic-2 pseudo-tameness toolkit."""

from .belyi import (
    BelyiChain,
    CertCheck,
    chain_as_dict,
    lemma_main_map,
    tame_belyi_genus0,
    wild_belyi,
    wild_step,
)
from .config import DEFAULT_LIMITS, Limits
from .cover import (
    RamificationReport,
    RamPoint,
    RationalCover,
    compose,
    conorm,
    cover_create,
    fiber,
    pushforward_place,
    ramification_report,
    report_as_dict,
)
from .errors import (
    InternalCheckError,
    ParseError,
    PreconditionError,
    RamforgeError,
    SizeBoundError,
)
from .funcfield import (
    Divisor,
    LaurentSeries,
    Place,
    RationalFunction,
    differential_divisor,
    divisor_of,
    laurent_expand,
    parse_divisor,
    parse_place,
    parse_rational,
    pole_divisor_of,
    prescribed_element,
    pth_power_test,
    rf_normalize,
    rr_basis,
    valuation,
    zero_divisor_of,
)
from .galois import GF, Field, FieldElement, embed, field_create
from .polyring import (
    Factorization,
    Polynomial,
    factor,
    gcd,
    irreducible_poly,
    is_irreducible,
    parse_polynomial,
    roots,
    squarefree_decompose,
)
from .pseudotame import (
    QuarticDecomposition,
    a_invariant,
    apply_quartic_moebius,
    cocycle_defect,
    critical_places,
    element_is_tame_at,
    is_pseudotame_at,
    is_pseudotame_everywhere,
    quartic_decompose,
    quartic_pole_reduction,
    regular_mod_squares,
    square_completion,
    v_dx,
    verify_a_solution,
)

__version__ = "0.1.0"

__all__ = [
    "BelyiChain",
    "CertCheck",
    "DEFAULT_LIMITS",
    "Divisor",
    "Factorization",
    "Field",
    "FieldElement",
    "GF",
    "InternalCheckError",
    "LaurentSeries",
    "Limits",
    "ParseError",
    "Place",
    "Polynomial",
    "PreconditionError",
    "QuarticDecomposition",
    "RamPoint",
    "RamforgeError",
    "RamificationReport",
    "RationalCover",
    "RationalFunction",
    "SizeBoundError",
    "a_invariant",
    "apply_quartic_moebius",
    "chain_as_dict",
    "cocycle_defect",
    "compose",
    "conorm",
    "cover_create",
    "critical_places",
    "differential_divisor",
    "divisor_of",
    "element_is_tame_at",
    "embed",
    "factor",
    "fiber",
    "field_create",
    "gcd",
    "irreducible_poly",
    "is_irreducible",
    "is_pseudotame_at",
    "is_pseudotame_everywhere",
    "laurent_expand",
    "lemma_main_map",
    "parse_divisor",
    "parse_place",
    "parse_polynomial",
    "parse_rational",
    "pole_divisor_of",
    "prescribed_element",
    "pth_power_test",
    "pushforward_place",
    "quartic_decompose",
    "quartic_pole_reduction",
    "ramification_report",
    "regular_mod_squares",
    "report_as_dict",
    "rf_normalize",
    "roots",
    "rr_basis",
    "square_completion",
    "squarefree_decompose",
    "tame_belyi_genus0",
    "v_dx",
    "valuation",
    "verify_a_solution",
    "wild_belyi",
    "wild_step",
    "zero_divisor_of",
]
