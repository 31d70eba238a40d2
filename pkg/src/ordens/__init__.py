"""ordens: exact densities of multiplicative-order valuations.

For an element a of Q or a quadratic field and a prime l, computes the
exact rational density of primes of the field at which the reduction of a
has multiplicative order of prescribed l-adic valuation, and verifies it
through an independent degree-series evaluation and empirical prime scans.
"""

from .cyclo import CycloProfile, Tower, cyclo_profile, cyclotomic_degree, special_case_flag
from .density import (
    DensityValue,
    InvariantError,
    ShapeReport,
    ShapeViolation,
    analyze,
    density,
    density_closed,
    density_series,
    shape_check,
)
from .field import (
    QQ,
    DomainError,
    Element,
    FieldMismatch,
    FieldSpec,
    ParseError,
    arith,
    format_element,
    parse_element,
    parse_field,
    pow_int,
    rational_nth_root,
)
from .kummer import KummerQuery, kummer_relative_degree, total_degree
from .roots import (
    Case,
    Decomposition,
    decompose,
    is_root_of_unity,
    is_strongly_indivisible,
    lth_roots,
    roots_of_unity,
    torsion_exponent,
    unit_order,
)
from .scan import (
    PrimeSlot,
    ScanReport,
    empirical_density,
    enumerate_slots,
    nonpower_certificate,
    order_valuation,
    split_fraction,
)

__version__ = "0.1.0"

__all__ = [
    "QQ", "FieldSpec", "Element", "arith", "pow_int", "rational_nth_root",
    "parse_field", "parse_element", "format_element",
    "FieldMismatch", "ParseError", "DomainError",
    "Case", "Decomposition", "decompose", "lth_roots", "roots_of_unity",
    "torsion_exponent", "unit_order", "is_root_of_unity", "is_strongly_indivisible",
    "CycloProfile", "Tower", "cyclo_profile", "cyclotomic_degree", "special_case_flag",
    "KummerQuery", "kummer_relative_degree", "total_degree",
    "DensityValue", "density", "density_closed", "density_series",
    "analyze", "shape_check", "ShapeReport", "InvariantError", "ShapeViolation",
    "PrimeSlot", "ScanReport", "enumerate_slots", "order_valuation",
    "empirical_density", "split_fraction", "nonpower_certificate",
    "__version__",
]
