"""Exact arithmetic for slope invariants, Hodge-Witt numbers, and p-adic
special values of zeta functions of complexes over finite fields."""

from .exactnum import (
    NotDivisibleError,
    Polynomial,
    ValuationContext,
    ZeroRootError,
    deflate,
    eval_at,
    inverse_root_multiplicity,
    newton_slopes,
    ord_p,
    power_sums,
    reciprocal_twist,
    scale_roots,
    slope_multiplicities,
    tensor_poly,
)
from .invariants import (
    InvariantTable,
    NonIntegralInvariantError,
    domino_table,
    e_r,
    euler_column_sums,
    hodge_witt,
    slope_numbers,
    weighted_hw,
)
from .rmodel import (
    BaseField,
    ComplexFormatError,
    CrysComplex,
    ParseError,
    SemanticError,
    SlotComplex,
    TorsionSlot,
    TypeIISlot,
    TypeISlot,
    direct_sum,
    parse,
    serialize,
    shift,
    tate_twist,
    to_crys,
    validate,
)
from .varieties import (
    BoundExceededError,
    DominoKunnethUnsupportedError,
    FunctionalEquationViolatedError,
    InconsistentError,
    NonIntegralCountError,
    SlopeOutOfRangeError,
    SmallFiniteField,
    WeierstrassCurve,
    compact_support_dual,
    count_points_curve,
    curve_from_weil,
    kunneth,
    parse_curve,
    projective_space,
    small_field,
    weil_from_counts,
    zeta_point_counts,
)
from .zeta import (
    HypothesisFailedError,
    SpecialValueReport,
    VerificationReport,
    ZetaFunction,
    chi,
    ext_ranks,
    hypothesis_check,
    pole_data,
    special_value,
    verify_main_theorem,
    z_factor,
    zeta_of,
)

__version__ = "0.1.0"
