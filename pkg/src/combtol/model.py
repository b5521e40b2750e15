"""Core data types: extended values, instances, objectives, perturbations.

A combinatorial minimization instance is a finite ground set of elements with
exact rational costs, an explicit nonempty family of feasible solutions
(nonempty subsets of the ground set), and an objective kind:

* ``SUM``        -- minimize the sum of the member costs,
* ``PRODUCT``    -- minimize the product of the member costs (all costs > 0),
* ``BOTTLENECK`` -- minimize the maximum member cost.

Costs are :class:`fractions.Fraction`, never floats: every sum/bottleneck
quantity downstream is rational-exact and is compared with zero tolerance.
Instances are immutable after construction and safe to share across threads;
every function in this module is pure.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, total_ordering
from typing import Iterable, Mapping, Union

from .errors import (
    InstanceError,
    PerturbationError,
    UndefinedOperationError,
    UnknownElementError,
)

RationalLike = Union[int, str, Fraction]

__all__ = [
    "ExtendedValue",
    "POS_INF",
    "NEG_INF",
    "ZERO",
    "ext",
    "ObjectiveKind",
    "Direction",
    "Instance",
    "PerturbationVector",
    "objective_value",
    "best_cost_over",
    "max_decrease",
    "apply_perturbation",
]


def _coerce_rational(value: RationalLike, what: str = "cost") -> Fraction:
    """Coerce int/str/Fraction to Fraction; floats are rejected to keep the
    exactness contract visible at the boundary."""
    if isinstance(value, bool) or isinstance(value, float):
        raise InstanceError(
            f"{what} must be an int, Fraction, or rational string, got {value!r}"
        )
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InstanceError(f"cannot parse {what} {value!r} as a rational") from exc
    raise InstanceError(f"{what} must be an int, Fraction, or rational string, got {value!r}")


@total_ordering
class ExtendedValue:
    """A rational number extended with +inf and -inf markers.

    Tolerances live in [0, +inf]; -inf exists only as the distinguished
    minimal value returned by an empty max (see ``smallest_other_max``).
    The order is total: -inf < every finite value < +inf. Addition and
    subtraction are defined whenever they do not produce inf - inf, which
    raises :class:`UndefinedOperationError` instead of returning a value.
    """

    __slots__ = ("_sign", "_value")

    def __init__(self, value: RationalLike | None = None, *, _sign: int = 0):
        if _sign:
            self._sign = _sign
            self._value = None
        else:
            self._sign = 0
            self._value = _coerce_rational(value, "extended value")

    # -- constructors ------------------------------------------------------

    @classmethod
    def finite(cls, value: RationalLike) -> "ExtendedValue":
        return cls(value)

    # -- predicates / accessors --------------------------------------------

    @property
    def is_finite(self) -> bool:
        return self._sign == 0

    @property
    def is_pos_inf(self) -> bool:
        return self._sign > 0

    @property
    def is_neg_inf(self) -> bool:
        return self._sign < 0

    def as_fraction(self) -> Fraction:
        if self._sign != 0:
            raise UndefinedOperationError("infinite value has no rational representation")
        return self._value  # type: ignore[return-value]

    # -- order ---------------------------------------------------------------

    def _key(self):
        return (self._sign, self._value if self._sign == 0 else 0)

    def __eq__(self, other) -> bool:
        other = _as_ext(other)
        if other is NotImplemented:
            return NotImplemented
        if self._sign != other._sign:
            return False
        return self._sign != 0 or self._value == other._value

    def __lt__(self, other) -> bool:
        other = _as_ext(other)
        if other is NotImplemented:
            return NotImplemented
        if self._sign != other._sign:
            return self._sign < other._sign
        if self._sign != 0:
            return False
        return self._value < other._value

    def __hash__(self) -> int:
        return hash(self._key())

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other) -> "ExtendedValue":
        other = _as_ext(other)
        if other is NotImplemented:
            return NotImplemented
        if self._sign == 0 and other._sign == 0:
            return ExtendedValue(self._value + other._value)
        if self._sign != 0 and other._sign != 0 and self._sign != other._sign:
            raise UndefinedOperationError("inf + (-inf) is undefined")
        return self if self._sign != 0 else other

    __radd__ = __add__

    def __neg__(self) -> "ExtendedValue":
        if self._sign != 0:
            return ExtendedValue(_sign=-self._sign)
        return ExtendedValue(-self._value)

    def __sub__(self, other) -> "ExtendedValue":
        other = _as_ext(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "ExtendedValue":
        other = _as_ext(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "ExtendedValue":
        """Multiplication by a finite positive rational (enough for the
        tolerance formulas; anything else is out of contract)."""
        other = _as_ext(other)
        if other is NotImplemented:
            return NotImplemented
        if not (other._sign == 0 and other._value > 0):
            raise UndefinedOperationError("extended multiplication requires a positive finite factor")
        if self._sign != 0:
            return self
        return ExtendedValue(self._value * other._value)

    __rmul__ = __mul__

    # -- formatting ------------------------------------------------------------

    def __str__(self) -> str:
        if self._sign > 0:
            return "inf"
        if self._sign < 0:
            return "-inf"
        return str(self._value)

    def __repr__(self) -> str:
        return f"ExtendedValue({str(self)!r})"


def _as_ext(value) -> "ExtendedValue":
    if isinstance(value, ExtendedValue):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return ExtendedValue(value)
    return NotImplemented


POS_INF = ExtendedValue(_sign=1)
NEG_INF = ExtendedValue(_sign=-1)
ZERO = ExtendedValue(0)


def ext(value: RationalLike) -> ExtendedValue:
    """Shorthand finite constructor."""
    return ExtendedValue(value)


class ObjectiveKind(enum.Enum):
    SUM = "sum"
    PRODUCT = "product"
    BOTTLENECK = "bottleneck"

    def __str__(self) -> str:  # serialization-friendly
        return self.value


class Direction(enum.Enum):
    INCREASE = "increase"
    DECREASE = "decrease"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Instance:
    """An explicit combinatorial minimization instance.

    ``elements`` fixes the declaration order used for all deterministic
    output; ``solutions`` is the family D, kept in input order. Use
    :meth:`build` rather than the raw constructor so costs are coerced and
    all invariants are checked.
    """

    elements: tuple[tuple[str, Fraction], ...]
    solutions: tuple[frozenset[str], ...]
    objective: ObjectiveKind

    @classmethod
    def build(
        cls,
        elements: Iterable[tuple[str, RationalLike]] | Mapping[str, RationalLike],
        solutions: Iterable[Iterable[str]],
        objective: ObjectiveKind | str,
    ) -> "Instance":
        if isinstance(objective, str):
            try:
                objective = ObjectiveKind(objective)
            except ValueError as exc:
                raise InstanceError(f"unknown objective {objective!r}") from exc
        if isinstance(elements, Mapping):
            element_pairs = tuple((str(k), _coerce_rational(v)) for k, v in elements.items())
        else:
            element_pairs = tuple((str(k), _coerce_rational(v)) for k, v in elements)
        solution_sets = tuple(frozenset(str(e) for e in sol) for sol in solutions)
        inst = cls(element_pairs, solution_sets, objective)
        inst._validate()
        return inst

    def _validate(self) -> None:
        ids = [e for e, _ in self.elements]
        if not ids:
            raise InstanceError("ground set must be nonempty")
        if len(set(ids)) != len(ids):
            raise InstanceError("duplicate element ids in ground set")
        if not self.solutions:
            raise InstanceError("solution family D must be nonempty")
        known = set(ids)
        seen: set[frozenset[str]] = set()
        for sol in self.solutions:
            if not sol:
                raise InstanceError("solutions must be nonempty subsets of the ground set")
            unknown = sol - known
            if unknown:
                raise UnknownElementError(
                    f"solution references unknown element id(s): {sorted(unknown)}"
                )
            if sol in seen:
                raise InstanceError(f"duplicate solution {sorted(sol)} in D")
            seen.add(sol)
        if self.objective is ObjectiveKind.PRODUCT:
            for e, c in self.elements:
                if c <= 0:
                    raise InstanceError(
                        f"product objective requires strictly positive costs; c({e}) = {c}"
                    )

    # -- accessors -------------------------------------------------------------

    @cached_property
    def cost(self) -> Mapping[str, Fraction]:
        return dict(self.elements)

    @cached_property
    def element_ids(self) -> tuple[str, ...]:
        return tuple(e for e, _ in self.elements)

    def require_element(self, e: str) -> None:
        if e not in self.cost:
            raise UnknownElementError(f"unknown element id {e!r}")

    def with_costs(self, costs: Mapping[str, Fraction]) -> "Instance":
        """Same ground set, solutions, and objective with replaced costs."""
        inst = Instance(
            tuple((e, costs[e]) for e, _ in self.elements),
            self.solutions,
            self.objective,
        )
        inst._validate()
        return inst


@dataclass(frozen=True)
class PerturbationVector:
    """Per-element nonnegative cost deltas applied in one direction.

    The domain may be any subset of the ground set (including the empty set,
    which perturbs nothing). Nonnegativity is checked on construction;
    instance-dependent constraints (product decreases must stay below the
    element cost) are checked by :func:`apply_perturbation`.
    """

    direction: Direction
    deltas: tuple[tuple[str, Fraction], ...]

    @classmethod
    def build(
        cls,
        direction: Direction | str,
        deltas: Mapping[str, RationalLike] | Iterable[tuple[str, RationalLike]],
    ) -> "PerturbationVector":
        if isinstance(direction, str):
            try:
                direction = Direction(direction)
            except ValueError as exc:
                raise PerturbationError(f"unknown direction {direction!r}") from exc
        items = deltas.items() if isinstance(deltas, Mapping) else deltas
        pairs = []
        for e, d in items:
            value = _coerce_rational(d, "delta")
            if value < 0:
                raise PerturbationError(f"delta for {e!r} must be >= 0, got {value}")
            pairs.append((str(e), value))
        ids = [e for e, _ in pairs]
        if len(set(ids)) != len(ids):
            raise PerturbationError("duplicate element id in perturbation vector")
        return cls(direction, tuple(pairs))

    @cated_property if False else cached_property
    def delta(self) -> Mapping[str, Fraction]:
        return dict(self.deltas)

    @property
    def total(self) -> Fraction:
        return sum((d for _, d in self.deltas), Fraction(0))


def objective_value(instance: Instance, solution: Iterable[str]) -> Fraction:
    """Objective value of a set of element ids under the instance's objective.

    The set need not belong to D (singletons are a common probe); it must be
    nonempty and reference only declared elements.
    """
    members = list(solution)
    if not members:
        raise InstanceError("cannot evaluate the empty set")
    cost = instance.cost
    for e in members:
        if e not in cost:
            raise UnknownElementError(f"unknown element id {e!r} in solution")
    values = [cost[e] for e in set(members)]
    kind = instance.objective
    if kind is ObjectiveKind.SUM:
        return sum(values, Fraction(0))
    if kind is ObjectiveKind.PRODUCT:
        out = Fraction(1)
        for v in values:
            out *= v
        return out
    return max(values)


def best_cost_over(instance: Instance, family: Iterable[Iterable[str]]) -> ExtendedValue:
    """Cost of the best solution within a sub-family; +inf for the empty family."""
    best: Fraction | None = None
    for sol in family:
        value = objective_value(instance, sol)
        if best is None or value < best:
            best = value
    if best is None:
        return POS_INF
    return ExtendedValue(best)


def max_decrease(instance: Instance, e: str) -> ExtendedValue:
    """Supremum admissible decrease of c(e) keeping the objective well-typed:
    unbounded for sum/bottleneck, c(e) for product."""
    instance.require_element(e)
    if instance.objective is ObjectiveKind.PRODUCT:
        return ExtendedValue(instance.cost[e])
    return POS_INF


def apply_perturbation(instance: Instance, vec: PerturbationVector) -> Instance:
    """New instance with costs shifted by the vector; D and objective unchanged."""
    cost = dict(instance.cost)
    sign = 1 if vec.direction is Direction.INCREASE else -1
    for e, d in vec.deltas:
        if e not in cost:
            raise UnknownElementError(f"perturbation names unknown element id {e!r}")
        new_cost = cost[e] + sign * d
        if (
            instance.objective is ObjectiveKind.PRODUCT
            and sign < 0
            and new_cost <= 0
        ):
            raise PerturbationError(
                f"decrease of {e!r} by {d} reaches or exceeds c({e}) = {cost[e]}; "
                "the product objective would no longer be well-typed"
            )
        cost[e] = new_cost
    return instance.with_costs(cost)
