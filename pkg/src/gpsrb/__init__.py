"""Series over strictly ordered monoids, coefficient-killing projectors, and
brute-force checkers for when such a projector satisfies the weight -1
identity P(f)P(g) = P(fP(g)) + P(P(f)g) - P(fg).
"""

from .laurent import (
    InsufficientPrecision,
    TruncatedLaurent,
    make_laurent,
    nonneg_part,
    pole_part,
    tl_rb_defect,
    to_series,
    zero_laurent,
)
from .monoids import (
    BadElement,
    BadTable,
    FiniteTable,
    IntLine,
    MonoidMismatch,
    NatLine,
    OrderedMonoid,
    VectorLex,
    VectorProduct,
    default_window,
    int_window,
    load_table,
    validate_monoid,
    vector_window,
)
from .oracles import (
    NotTotalOrder,
    TheoremReport,
    TooLarge,
    cyclic_table,
    default_corpus,
    idempotent_pair_table,
    scan_cutoffs,
    truncated_addition_table,
    verify_theorem_decomposition,
    verify_total_order_threshold_rule,
)
from .outcomes import CheckOutcome
from .parsing import ParseError, parse_expr, parse_series, render_laurent, render_series
from .projectors import (
    Complement,
    CutoffProjector,
    Decomposition,
    DecompositionProjector,
    Projector,
    closed_under_addition,
    commute_check,
    cutoff_violation_pairs,
    indicator_pair_scan,
    is_subsemigroup,
    rb_defect,
)
from .scalars import (
    IntScalar,
    ModScalar,
    QQ,
    RatScalar,
    Ring,
    RingMismatch,
    Scalar,
    ZeroDenominator,
    Zmod,
    ZZ,
    make_rational,
)
from .series import Series, indicator, one_series, series_eq, zero_series

__all__ = [
    "CheckOutcome",
    "Complement",
    "CutoffProjector",
    "Decomposition",
    "DecompositionProjector",
    "FiniteTable",
    "InsufficientPrecision",
    "IntLine",
    "IntScalar",
    "ModScalar",
    "MonoidMismatch",
    "NatLine",
    "NotTotalOrder",
    "OrderedMonoid",
    "ParseError",
    "Projector",
    "QQ",
    "RatScalar",
    "Ring",
    "RingMismatch",
    "Scalar",
    "Series",
    "TheoremReport",
    "TooLarge",
    "TruncatedLaurent",
    "VectorLex",
    "VectorProduct",
    "ZZ",
    "ZeroDenominator",
    "Zmod",
    "BadElement",
    "BadTable",
    "closed_under_addition",
    "commute_check",
    "cutoff_violation_pairs",
    "cyclic_table",
    "default_corpus",
    "default_window",
    "idempotent_pair_table",
    "indicator",
    "indicator_pair_scan",
    "int_window",
    "is_subsemigroup",
    "load_table",
    "make_laurent",
    "make_rational",
    "nonneg_part",
    "one_series",
    "parse_expr",
    "parse_series",
    "pole_part",
    "rb_defect",
    "render_laurent",
    "render_series",
    "scan_cutoffs",
    "series_eq",
    "tl_rb_defect",
    "to_series",
    "truncated_addition_table",
    "validate_monoid",
    "vector_window",
    "verify_theorem_decomposition",
    "verify_total_order_threshold_rule",
    "zero_laurent",
    "zero_series",
]
