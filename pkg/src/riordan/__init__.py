"""Exact-arithmetic truncated power series and Riordan group toolkit."""

from .arrays import RiordanPair, TriMatrix, subgroup_element
from .constructions import (
    NamedGF,
    family_from_f,
    g_subgroup_inv,
    g_subgroup_mul,
    gf_names,
    has_comp_order_two,
    named_gf,
    named_series,
    power_pseudo,
    pseudo_from_g,
    stochastic_from_g,
)
from .errors import (
    CompositionError,
    DegenerateZError,
    DivisionByZeroSeries,
    ExprSyntaxError,
    OrderError,
    OrderTwoError,
    PairInvariantError,
    PreconditionError,
    ProprietyError,
    ReversionError,
    RiordanError,
    SeriesError,
    SqrtError,
    UnknownNameError,
    ValuationError,
)
from .exprs import eval_series, parse, series_from_text, to_text
from .production import (
    SeqReport,
    a_sequence,
    az_from_production,
    az_from_series,
    extract_az,
    production_matrix,
    recurrence_check,
)
from .series import TruncSeries, rational_str

__all__ = [
    "CompositionError",
    "DegenerateZError",
    "DivisionByZeroSeries",
    "ExprSyntaxError",
    "NamedGF",
    "OrderError",
    "OrderTwoError",
    "PairInvariantError",
    "PreconditionError",
    "ProprietyError",
    "ReversionError",
    "RiordanError",
    "RiordanPair",
    "SeqReport",
    "SeriesError",
    "SqrtError",
    "TriMatrix",
    "TruncSeries",
    "UnknownNameError",
    "ValuationError",
    "a_sequence",
    "az_from_production",
    "az_from_series",
    "eval_series",
    "extract_az",
    "family_from_f",
    "g_subgroup_inv",
    "g_subgroup_mul",
    "gf_names",
    "has_comp_order_two",
    "named_gf",
    "named_series",
    "parse",
    "power_pseudo",
    "production_matrix",
    "pseudo_from_g",
    "rational_str",
    "recurrence_check",
    "series_from_text",
    "stochastic_from_g",
    "subgroup_element",
    "to_text",
]

__version__ = "0.1.0"
