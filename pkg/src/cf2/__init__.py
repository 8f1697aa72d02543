"""Continued fractions and power series of doubling-word automatic
sequences over GF(2)."""

from .gf2poly import Gf2Poly, ParseError, UniPoly, derivative, is_square, square_root
from .seqcore import (
    Constant,
    DistinctLettersError,
    EpsSpec,
    KernelElement,
    PositionSet,
    Shift,
    WordTooLargeError,
    build_word,
    kernel,
    kernel_sorted,
    letter_at,
    positions,
    positions_predicted,
    stream_prefix,
)
from .invseries import InvSeries, NotInvertibleError, eval_relation_inv
from .zseries import (
    ZSeries,
    cartier_z,
    compute_F,
    compute_F0,
    compute_Fn,
    compute_R,
    eval_relation_z,
    poly_to_zseries,
    role_positions,
)
from .cfalg import (
    DEFAULT_FIND_PREC,
    DEFAULT_VERIFY_PREC,
    ContinuantPair,
    Relation,
    ResidualReport,
    compute_G,
    compute_Gn,
    compute_cf,
    compute_inv_cf,
    continuant_monomial,
    continuants,
    find_relation,
    general_continuant,
    minimal_degree_report,
    verify_relation,
)
from .laurent import (
    CfExpansion,
    LaurentSeries,
    cf_expand,
    cf_value,
    specialize_inv,
    unbounded_quotient_series,
)
from .riccati import (
    PatternError,
    QuotientSeq,
    RiccatiWitness,
    SquareInvariantError,
    baum_sweet_check,
    convergents_uni,
    fn_witness,
    riccati_residual,
)

__version__ = "0.1.0"

__all__ = [
    "Gf2Poly",
    "UniPoly",
    "ParseError",
    "derivative",
    "is_square",
    "square_root",
    "EpsSpec",
    "PositionSet",
    "Shift",
    "Constant",
    "KernelElement",
    "WordTooLargeError",
    "DistinctLettersError",
    "letter_at",
    "build_word",
    "stream_prefix",
    "positions",
    "positions_predicted",
    "kernel",
    "kernel_sorted",
    "InvSeries",
    "NotInvertibleError",
    "eval_relation_inv",
    "ZSeries",
    "compute_F",
    "compute_R",
    "compute_F0",
    "compute_Fn",
    "role_positions",
    "cartier_z",
    "eval_relation_z",
    "poly_to_zseries",
    "ContinuantPair",
    "Relation",
    "ResidualReport",
    "continuants",
    "continuant_monomial",
    "general_continuant",
    "compute_inv_cf",
    "compute_cf",
    "compute_G",
    "compute_Gn",
    "find_relation",
    "minimal_degree_report",
    "verify_relation",
    "DEFAULT_FIND_PREC",
    "DEFAULT_VERIFY_PREC",
    "LaurentSeries",
    "CfExpansion",
    "cf_expand",
    "cf_value",
    "specialize_inv",
    "unbounded_quotient_series",
    "QuotientSeq",
    "RiccatiWitness",
    "PatternError",
    "SquareInvariantError",
    "convergents_uni",
    "fn_witness",
    "riccati_residual",
    "baum_sweet_check",
]
