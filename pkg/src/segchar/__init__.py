"""Exact reciprocal characters and dominant q-characters of standard modules.

The index objects are multisegments (finite multisets of integer
intervals).  The package counts reciprocal multiplicities A(m, n) by
three independent tableau routes and a brute-force shuffle oracle, and
expands rank-N q-characters whose dominant parts must agree with the
counts after the rank collapse.
"""

from .charring import (
    DrinfeldMonomial,
    DrinfeldPoly,
    SegLaurentPoly,
    SegMonomial,
    dominant_part,
    poly_mul,
    project_pN,
    to_drinfeld,
)
from .domtab import AMatrixRow, DomRow, DomTableau, a_matrix_row, enumerate_A
from .errors import (
    CapExceeded,
    InvalidSegment,
    NoConnection,
    NonDivisible,
    NotInJ0,
    Overflow,
    ParseError,
    RankExceeded,
    SegcharError,
    ZeroMultisegment,
)
from .mackey import (
    MackeyRow,
    MackeyTableau,
    RestrictionTerm,
    enumerate_rows,
    mackey_connection_exists,
    mackey_restriction,
    theta_of_mackey,
)
from .multiseg import (
    Multisegment,
    OrderedMultisegment,
    Segment,
    SupportVector,
    Word,
    descending_word,
)
from .qchar import (
    FundamentalSpec,
    chi_N_via_tableaux,
    dominant_qchar,
    fundamental_qchar,
    standard_qchar,
)
from .verify import (
    Discrepancy,
    SweepConfig,
    SweepReport,
    a_via_shuffle,
    check_bijection,
    check_theorem_A,
    shuffle_character,
    sweep,
)

__version__ = "0.1.0"

__all__ = [
    "AMatrixRow",
    "CapExceeded",
    "Discrepancy",
    "DomRow",
    "DomTableau",
    "DrinfeldMonomial",
    "DrinfeldPoly",
    "FundamentalSpec",
    "InvalidSegment",
    "MackeyRow",
    "MackeyTableau",
    "Multisegment",
    "NoConnection",
    "NonDivisible",
    "NotInJ0",
    "OrderedMultisegment",
    "Overflow",
    "ParseError",
    "RankExceeded",
    "RestrictionTerm",
    "SegLaurentPoly",
    "SegMonomial",
    "Segment",
    "SegcharError",
    "SupportVector",
    "SweepConfig",
    "SweepReport",
    "Word",
    "ZeroMultisegment",
    "a_matrix_row",
    "a_via_shuffle",
    "check_bijection",
    "check_theorem_A",
    "chi_N_via_tableaux",
    "descending_word",
    "dominant_part",
    "dominant_qchar",
    "enumerate_A",
    "enumerate_rows",
    "fundamental_qchar",
    "mackey_connection_exists",
    "mackey_restriction",
    "poly_mul",
    "project_pN",
    "shuffle_character",
    "standard_qchar",
    "sweep",
    "theta_of_mackey",
    "to_drinfeld",
]
