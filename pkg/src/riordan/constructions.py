"""Construction procedures for stochastic arrays and pseudo-involutions,
plus the registry of named generating functions.

Three builders: a stochastic pair from any g via f = -g + z*g + 1; the
unique pseudo-involution partner f for a g with g(0) = 1 and g'(0) != 0,
via f = -Gbar(-G/g) with G = g - 1; and the four canonical pseudo-
involutions sharing an f whose negative has compositional order two.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arrays import RiordanPair, subgroup_element
from .errors import OrderTwoError, PairInvariantError, PreconditionError
from .series import TruncSeries


# ---- named generating functions ----

@dataclass(frozen=True)
class NamedGF:
    name: str
    series: TruncSeries
    description: str


def _fib(order: int) -> TruncSeries:
    return 1 / TruncSeries.polynomial([1, -1, -1], order)


def _lucas(order: int) -> TruncSeries:
    return TruncSeries.polynomial([1, 0, 1], order) / TruncSeries.polynomial([1, -1, -1], order)


def _cfib(n: int):
    def build(order: int) -> TruncSeries:
        return _fib(order) ** n
    return build


def _fib_f(order: int) -> TruncSeries:
    return pseudo_from_g(_fib(order)).f


def _lucas_f(order: int) -> TruncSeries:
    return pseudo_from_g(_lucas(order)).f


_REGISTRY: dict[str, tuple[str, object]] = {
    "fib": ("Fibonacci numbers, 1/(1-z-z^2)", _fib),
    "lucas": ("modified Lucas numbers, (1+z^2)/(1-z-z^2)", _lucas),
    "cfib2": ("convolved Fibonacci numbers, (1/(1-z-z^2))^2", _cfib(2)),
    "cfib3": ("convolved Fibonacci numbers, (1/(1-z-z^2))^3", _cfib(3)),
    "fib_f": ("the f pairing with fib in its pseudo-involution", _fib_f),
    "lucas_f": ("the f pairing with lucas in its pseudo-involution", _lucas_f),
}


def gf_names() -> tuple[str, ...]:
    return tuple(_REGISTRY)


def named_series(name: str, order: int) -> TruncSeries:
    description, build = _REGISTRY[name]
    return build(order)


def named_gf(name: str, order: int) -> NamedGF:
    description, build = _REGISTRY[name]
    return NamedGF(name=name, series=build(order), description=description)


# ---- stochastic arrays ----

def stochastic_from_g(g: TruncSeries) -> RiordanPair:
    """Pair (g, -g + z*g + 1), whose expansion has every row sum equal to 1.

    Needs g(0) != 0; the companion f only has a zero constant term when
    g(0) = 1, so other constant terms fail the pair invariant.  The result
    is usually stretched, and f collapses to zero entirely for g = 1/(1-z).
    """
    if g.coeffs[0] == 0:
        raise PairInvariantError("stochastic construction needs g(0) != 0")
    f = TruncSeries.z(g.order) * g - g + 1
    return RiordanPair(g, f)


# ---- pseudo-involutions from g ----

def pseudo_from_g(g: TruncSeries) -> RiordanPair:
    """The unique f making (g, f) a pseudo-involution, for g(0) = 1, g'(0) != 0.

    Computes G = g - 1 and f = -Gbar(-G/g); a deterministic, exact
    replacement for solving the same construction with a symbolic toolbox.
    """
    if g.coeffs[0] != 1:
        raise PreconditionError("pseudo-involution construction needs g(0) = 1")
    if g.order < 2 or g.coeffs[1] == 0:
        raise PreconditionError("pseudo-involution construction needs g'(0) != 0")
    G = g - 1
    f = -(G.reverse().compose(-G / g))
    return RiordanPair(g, f)


def power_pseudo(pair: RiordanPair, n: int) -> RiordanPair:
    """(g^n, f), which inherits the pseudo-involution property."""
    if n < 1:
        raise PreconditionError(f"power must be a positive integer, got {n}")
    if not pair.is_pseudo_involution():
        raise PreconditionError("power construction needs a pseudo-involution")
    return RiordanPair(pair.g ** n, pair.f)


# ---- pseudo-involution families from f ----

def has_comp_order_two(F: TruncSeries, order: int | None = None) -> bool:
    """F(F(z)) = z modulo z^order (available order when omitted)."""
    if F.coeffs[0] != 0 or F.order < 2 or F.coeffs[1] == 0:
        return False
    n = F.order if order is None else min(order, F.order)
    return F.compose(F).matches(TruncSeries.z(n), n)


FAMILY_KINDS = ("associated", "bell", "derivative", "hitting_time")


def family_from_f(f: TruncSeries) -> list[RiordanPair]:
    """The four canonical pseudo-involutions sharing f:
    (1, f), (f/z, f), (f', f) and (z*f'/f, f).

    Requires -f to have compositional order two at the available order.
    """
    if not has_comp_order_two(-f):
        raise OrderTwoError("-f must satisfy -f(-f(z)) = z to the available order")
    return [subgroup_element(kind, f) for kind in FAMILY_KINDS]


def g_subgroup_mul(g1: TruncSeries, g2: TruncSeries, f: TruncSeries) -> RiordanPair:
    """(g1*g2, f), staying inside {g : (g, f) is a pseudo-involution}."""
    _require_members(f, g1, g2)
    return RiordanPair(g1 * g2, f)


def g_subgroup_inv(g: TruncSeries, f: TruncSeries) -> RiordanPair:
    """(1/g, f), staying inside {g : (g, f) is a pseudo-involution}."""
    _require_members(f, g)
    return RiordanPair(1 / g, f)


def _require_members(f: TruncSeries, *gs: TruncSeries) -> None:
    for g in gs:
        if not RiordanPair(g, f).is_pseudo_involution():
            raise PreconditionError(
                "operand g does not form a pseudo-involution with this f"
            )
