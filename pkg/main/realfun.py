"""
The ring of real-continuous functions on a finite topoframe.

On a finite frame the nonzero singleton values f({r}) of a frame homomorphism
from the powerset of the reals are pairwise disjoint, so only finitely many
are nonzero and they partition the top element. A function is therefore a
finite list of (value, carrier) pieces. Continuity (f(]p,q[) is open for all
rationals p < q) holds iff every carrier is open: an interval isolating one
value forces its carrier open, and joins of opens are open. Each carrier is
then clopen because its complement is the join of the other carriers.

Values are exact ``Fraction`` objects; every construction used here stays
inside the rationals.
"""

from __future__ import annotations

import logging
import operator
import random
from dataclasses import dataclass
from dataclasses import field
from dataclasses import replace
from fractions import Fraction
from itertools import combinations
from itertools import product
from typing import Callable
from typing import Iterable
from typing import Sequence

from .exceptions import EDHypothesisFailed
from .exceptions import InvariantViolation
from .exceptions import MixedTopoframes
from .exceptions import NotAPartition
from .exceptions import NotClopen
from .exceptions import NotContinuous
from .exceptions import NotIdempotent
from .exceptions import NotOrthogonal
from .exceptions import PreconditionFailed
from .lattice_core import Element
from .topoframe import PropertyCheck
from .topoframe import Topoframe
from .topoframe import is_ed_frame
from .topoframe import is_p_topoframe

logger = logging.getLogger(__name__)

RationalLike = Fraction | int | str

DEFAULT_POOL: tuple[Fraction, ...] = tuple(
    Fraction(value) for value in ("0", "1", "-1", "2", "1/2", "-3/2")
)


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, float):
        raise TypeError("Function values must be exact rationals, not floats.")
    return Fraction(value)


def _format_rational(value: Fraction | None, infinite: str) -> str:
    return infinite if value is None else str(value)


@dataclass(frozen=True)
class Interval:
    """A rational interval; ``None`` bounds are infinite."""

    lower: Fraction | None = None
    upper: Fraction | None = None
    lower_closed: bool = False
    upper_closed: bool = False

    def __contains__(self, x: object) -> bool:
        if not isinstance(x, (Fraction, int)):
            return False
        if self.lower is not None:
            if x < self.lower or (x == self.lower and not self.lower_closed):
                return False
        if self.upper is not None:
            if x > self.upper or (x == self.upper and not self.upper_closed):
                return False
        return True

    def negated(self) -> "Interval":
        return Interval(
            None if self.upper is None else -self.upper,
            None if self.lower is None else -self.lower,
            self.upper_closed,
            self.lower_closed,
        )

    def __str__(self) -> str:
        return (
            ("[" if self.lower_closed else "(")
            + _format_rational(self.lower, "-inf")
            + ","
            + _format_rational(self.upper, "inf")
            + ("]" if self.upper_closed else ")")
        )


class RealSet:
    """
    A decidable subset of the rationals, closed under complement (``~``),
    union (``|``), intersection (``&``) and negation (``-X``).
    """

    def __contains__(self, x: object) -> bool:
        raise NotImplementedError

    def __or__(self, other: "RealSet") -> "RealSet":
        return DescriptorUnion((self, other))

    def __and__(self, other: "RealSet") -> "RealSet":
        return DescriptorIntersection((self, other))

    def __invert__(self) -> "RealSet":
        raise NotImplementedError

    def __neg__(self) -> "RealSet":
        raise NotImplementedError


@dataclass(frozen=True)
class SetDescriptor(RealSet):
    """
    A finite union of intervals and points, optionally complemented.
    """

    intervals: tuple[Interval, ...] = ()
    points: frozenset[Fraction] = field(default_factory=frozenset)
    complemented: bool = False

    def __contains__(self, x: object) -> bool:
        inside = x in self.points or any(x in interval for interval in self.intervals)
        return inside != self.complemented

    def __invert__(self) -> "SetDescriptor":
        return replace(self, complemented=not self.complemented)

    def __neg__(self) -> "SetDescriptor":
        return SetDescriptor(
            tuple(interval.negated() for interval in self.intervals),
            frozenset(-point for point in self.points),
            self.complemented,
        )

    def _parts(self) -> list[str]:
        parts = [str(interval) for interval in self.intervals]
        if self.points:
            parts.append("{" + ",".join(str(p) for p in sorted(self.points)) + "}")
        return parts

    def __str__(self) -> str:
        parts = self._parts()
        if self.complemented:
            return " & ".join(f"~{part}" for part in parts) if parts else "R"
        return " | ".join(parts) if parts else "{}"


@dataclass(frozen=True)
class DescriptorUnion(RealSet):
    members: tuple[RealSet, ...]

    def __contains__(self, x: object) -> bool:
        return any(x in member for member in self.members)

    def __invert__(self) -> RealSet:
        return DescriptorIntersection(tuple(~member for member in self.members))

    def __neg__(self) -> RealSet:
        return DescriptorUnion(tuple(-member for member in self.members))

    def __str__(self) -> str:
        return " | ".join(str(member) for member in self.members)


@dataclass(frozen=True)
class DescriptorIntersection(RealSet):
    members: tuple[RealSet, ...]

    def __contains__(self, x: object) -> bool:
        return all(x in member for member in self.members)

    def __invert__(self) -> RealSet:
        return DescriptorUnion(tuple(~member for member in self.members))

    def __neg__(self) -> RealSet:
        return DescriptorIntersection(tuple(-member for member in self.members))

    def __str__(self) -> str:
        rendered = []
        for member in self.members:
            text = str(member)
            rendered.append(f"({text})" if " | " in text else text)
        return " & ".join(rendered)


EMPTY = SetDescriptor()
REALS = SetDescriptor(complemented=True)


def points(*values: RationalLike) -> SetDescriptor:
    return SetDescriptor(points=frozenset(as_rational(value) for value in values))


def open_interval(p: RationalLike | None, q: RationalLike | None) -> SetDescriptor:
    return SetDescriptor(
        (
            Interval(
                None if p is None else as_rational(p),
                None if q is None else as_rational(q),
            ),
        )
    )


ZERO = points(0)
NONZERO = ~ZERO


class StepFunction:
    """
    An element of the ring, as a clopen partition of the top element labelled
    by distinct rationals.

    The constructor merges pieces with equal values (joining their carriers),
    drops ⊥ carriers and sorts by value, so equal functions compare equal
    structurally. It raises NotAPartition or NotContinuous on invalid input.
    """

    __slots__ = ("topoframe", "pieces")

    def __init__(
        self,
        topoframe: Topoframe,
        pieces: Iterable[tuple[RationalLike, Element]],
    ):
        lattice = topoframe.lattice
        merged: dict[Fraction, Element] = {}
        for raw_value, carrier in pieces:
            value = as_rational(raw_value)
            lattice._check(carrier)
            merged[value] = merged[value] | carrier if value in merged else carrier
        canonical = tuple(
            sorted(
                ((value, carrier) for value, carrier in merged.items() if carrier != lattice.bottom),
                key=lambda piece: piece[0],
            )
        )
        for (first_value, first), (second_value, second) in combinations(canonical, 2):
            if (first & second) != lattice.bottom:
                raise NotAPartition(
                    f"carriers of {first_value} and {second_value} overlap in {first & second}"
                )
        if lattice.big_join(carrier for _, carrier in canonical) != lattice.top:
            raise NotAPartition("carriers do not cover the top element")
        for _, carrier in canonical:
            if carrier not in topoframe.tau:
                raise NotContinuous(carrier)
        self.topoframe = topoframe
        self.pieces: tuple[tuple[Fraction, Element], ...] = canonical

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, StepFunction)
            and self.topoframe is other.topoframe
            and self.pieces == other.pieces
        )

    def __hash__(self) -> int:
        return hash(tuple((value, carrier.index) for value, carrier in self.pieces))

    def __str__(self) -> str:
        return " ; ".join(f"{value}@{carrier}" for value, carrier in self.pieces)

    def __repr__(self) -> str:
        return f"StepFunction({self})"

    def __call__(self, subset: RealSet) -> Element:
        return evaluate(self, subset)

    @property
    def values(self) -> tuple[Fraction, ...]:
        return tuple(value for value, _ in self.pieces)

    @property
    def is_zero(self) -> bool:
        return all(value == 0 for value, _ in self.pieces)

    def _coerce(self, other: "StepFunction | RationalLike") -> "StepFunction":
        if isinstance(other, StepFunction):
            if other.topoframe is not self.topoframe:
                raise MixedTopoframes(self, other)
            return other
        return make_constant(self.topoframe, other)

    def _combine(
        self,
        other: "StepFunction | RationalLike",
        operation: Callable[[Fraction, Fraction], Fraction],
    ) -> "StepFunction":
        other = self._coerce(other)
        return StepFunction(
            self.topoframe,
            (
                (operation(value, other_value), carrier & other_carrier)
                for value, carrier in self.pieces
                for other_value, other_carrier in other.pieces
            ),
        )

    def __add__(self, other: "StepFunction | RationalLike") -> "StepFunction":
        return self._combine(other, operator.add)

    __radd__ = __add__

    def __mul__(self, other: "StepFunction | RationalLike") -> "StepFunction":
        return self._combine(other, operator.mul)

    __rmul__ = __mul__

    def __sub__(self, other: "StepFunction | RationalLike") -> "StepFunction":
        return self._combine(other, operator.sub)

    def __rsub__(self, other: RationalLike) -> "StepFunction":
        return make_constant(self.topoframe, other) - self

    def __neg__(self) -> "StepFunction":
        return StepFunction(self.topoframe, ((-value, carrier) for value, carrier in self.pieces))

    def __abs__(self) -> "StepFunction":
        return StepFunction(self.topoframe, ((abs(value), carrier) for value, carrier in self.pieces))

    def __pow__(self, exponent: int) -> "StepFunction":
        if exponent < 0:
            raise ValueError("Only non-negative powers are defined on the whole ring.")
        return StepFunction(
            self.topoframe, ((value**exponent, carrier) for value, carrier in self.pieces)
        )

    def minimum(self, other: "StepFunction | RationalLike") -> "StepFunction":
        return self._combine(other, min)

    def maximum(self, other: "StepFunction | RationalLike") -> "StepFunction":
        return self._combine(other, max)

    def scale(self, factor: RationalLike) -> "StepFunction":
        factor = as_rational(factor)
        return StepFunction(
            self.topoframe, ((factor * value, carrier) for value, carrier in self.pieces)
        )

    def is_nonnegative(self) -> bool:
        return all(value >= 0 for value, _ in self.pieces)


_OPERATIONS: dict[str, Callable[[Fraction, Fraction], Fraction]] = {
    "+": operator.add,
    "add": operator.add,
    "*": operator.mul,
    "·": operator.mul,
    "mul": operator.mul,
    "∧": min,
    "min": min,
    "∨": max,
    "max": max,
}


def make_constant(tf: Topoframe, r: RationalLike) -> StepFunction:
    return StepFunction(tf, [(r, tf.lattice.top)])


def evaluate(f: StepFunction, subset: RealSet) -> Element:
    """f(X): the join of the carriers whose value lies in X."""
    return f.topoframe.lattice.big_join(
        carrier for value, carrier in f.pieces if value in subset
    )


def ring_op(f: StepFunction, g: StepFunction, op: str) -> StepFunction:
    """
    (f ⋄ g)(X) = ⋁{f({y}) ∧ g({z}) : y ⋄ z ∈ X} for ⋄ in +, ·, ∧ (min), ∨ (max).
    """
    try:
        operation = _OPERATIONS[op]
    except KeyError:
        raise ValueError(f"Unknown ring operation {op!r}") from None
    if f.topoframe is not g.topoframe:
        raise MixedTopoframes(f, g)
    return f._combine(g, operation)


def negate(f: StepFunction) -> StepFunction:
    return -f


def absolute(f: StepFunction) -> StepFunction:
    return abs(f)


def scalar(r: RationalLike, f: StepFunction) -> StepFunction:
    return f.scale(r)


def zero_of(f: StepFunction) -> Element:
    """z(f) = f({0})."""
    return evaluate(f, ZERO)


def coz_of(f: StepFunction) -> Element:
    """coz(f) = f(R \\ {0})."""
    return evaluate(f, NONZERO)


def characteristic(tf: Topoframe, a: Element) -> StepFunction:
    """f_a: the idempotent with f_a({1}) = a and f_a({0}) = a′."""
    lattice = tf.lattice
    if a not in tf.tau or not lattice.is_complemented(a):
        raise NotClopen(a)
    complement = lattice.complement_of(a)
    if complement not in tf.tau:
        raise NotClopen(a)
    return StepFunction(tf, [(0, complement), (1, a)])


def common_topoframe(
    functions: Sequence[StepFunction], topoframe: Topoframe | None
) -> Topoframe:
    tf = topoframe if topoframe is not None else (functions[0].topoframe if functions else None)
    if tf is None:
        raise PreconditionFailed("an empty family needs an explicit topoframe")
    for f in functions:
        if f.topoframe is not tf:
            raise MixedTopoframes(f, tf)
    return tf


@dataclass(frozen=True)
class AbsorbReport:
    """Identities relating a family to the characteristic function of its cozero join."""

    cover: Element
    identities: dict[str, bool]

    @property
    def holds(self) -> bool:
        return all(self.identities.values())

    @property
    def failures(self) -> list[str]:
        return [name for name, ok in self.identities.items() if not ok]


def absorb_laws(
    family: Iterable[StepFunction],
    topoframe: Topoframe | None = None,
    exponents: Sequence[int] = (1, 2, 3),
) -> AbsorbReport:
    """
    With a = ⋁ coz(f_λ): f_λ·f_aⁿ = f_λ, f_λ·f_{a′}ⁿ = 0 and
    (⋁ coz f_λ)′ = ⋀ z(f_λ).

    f_a is idempotent, so every exponent gives the same product; several are
    checked anyway.
    """
    family = list(family)
    tf = common_topoframe(family, topoframe)
    lattice = tf.lattice
    cover = lattice.big_join(coz_of(f) for f in family)
    complement = lattice.complement_of(cover)
    f_cover = characteristic(tf, cover)
    f_complement = characteristic(tf, complement)
    identities = {
        "(join of cozeros)' = meet of zeros": complement
        == lattice.big_meet(zero_of(f) for f in family)
    }
    for position, f in enumerate(family):
        for exponent in exponents:
            identities[f"f{position}·f_a^{exponent} = f{position}"] = (
                f * f_cover**exponent == f
            )
            identities[f"f{position}·f_a'^{exponent} = 0"] = (
                f * f_complement**exponent
            ).is_zero
    return AbsorbReport(cover, identities)


def is_unit(f: StepFunction) -> PropertyCheck:
    """Units are exactly the functions with z(f) = ⊥; the inverse is the witness."""
    lattice = f.topoframe.lattice
    zero = zero_of(f)
    if zero != lattice.bottom:
        return PropertyCheck(False, witness=zero, detail="zero element is not bottom")
    inverse = StepFunction(f.topoframe, ((1 / value, carrier) for value, carrier in f.pieces))
    if f * inverse != make_constant(f.topoframe, 1):
        raise InvariantViolation("f·f⁻¹ = 1", f)
    return PropertyCheck(True, witness=inverse)


def is_zerodivisor(f: StepFunction) -> PropertyCheck:
    """
    A nonzero nonunit f is a zerodivisor, witnessed by g = f_{z(f)}.

    The zero function is reported as ``detail="zero"`` without a witness.
    """
    if f.is_zero:
        return PropertyCheck(False, detail="zero")
    zero = zero_of(f)
    if zero == f.topoframe.lattice.bottom:
        return PropertyCheck(False, detail="unit")
    witness = characteristic(f.topoframe, zero)
    if witness.is_zero or not (f * witness).is_zero:
        raise InvariantViolation("f·f_z(f) = 0 with f_z(f) nonzero", f)
    return PropertyCheck(True, witness=witness)


def quasi_inverse(f: StepFunction) -> StepFunction:
    """
    g with g({x}) = f({1/x}) for x ≠ 0 and g({0}) = z(f); then f = g·f².
    """
    lattice = f.topoframe.lattice
    zero = zero_of(f)
    pieces = [(1 / value, carrier) for value, carrier in f.pieces if value != 0]
    if zero != lattice.bottom:
        pieces.append((Fraction(0), zero))
    g = StepFunction(f.topoframe, pieces)
    if g * f * f != f:
        raise InvariantViolation("f = g·f²", f)
    if zero_of(g) != zero:
        raise InvariantViolation("z(g) = z(f)", f)
    return g


def idempotent_normal_form(e: StepFunction) -> Element:
    """An idempotent e equals f_{coz(e)}; returns coz(e)."""
    if e * e != e:
        raise NotIdempotent(e)
    cover = coz_of(e)
    if set(e.values) - {0, 1} or e != characteristic(e.topoframe, cover):
        raise InvariantViolation("e = f_coz(e)", e)
    return cover


def unit_and_idempotent_from_regular(
    a: StepFunction, x: StepFunction
) -> tuple[StepFunction, StepFunction]:
    """
    Given a = x·a², returns (u, e) with u = 1 + b − ab a unit (b = a·x²) and
    e = a·u idempotent.
    """
    if a.topoframe is not x.topoframe:
        raise MixedTopoframes(a, x)
    if x * a * a != a:
        raise PreconditionFailed(f"{a} is not x·a² for x = {x}")
    b = a * x * x
    u = 1 + b - a * b
    e = a * u
    if zero_of(u) != a.topoframe.lattice.bottom:
        raise InvariantViolation("u is a unit", u)
    if e * e != e:
        raise InvariantViolation("a·u is idempotent", e)
    return u, e


def _check_orthogonal(S: list[StepFunction], T: list[StepFunction]) -> list[StepFunction]:
    for f in S:
        if f in T:
            raise NotOrthogonal(f, f)
    members = list(dict.fromkeys(S)) + list(dict.fromkeys(T))
    for f, g in combinations(members, 2):
        if not (f * g).is_zero:
            raise NotOrthogonal(f, g)
    return members


def orthogonal_geometry(
    S: Iterable[StepFunction],
    T: Iterable[StepFunction],
    topoframe: Topoframe | None = None,
) -> tuple[Element, Element]:
    """
    (s, t), the joined cozeros of S and T, after checking s ∧ t′ = s and,
    for each member f against the rest R, coz(f) ∧ ⋀ z(g) = coz(f) and
    z(f) ∨ ⋁ coz(g) = z(f).
    """
    S, T = list(S), list(T)
    tf = common_topoframe(S + T, topoframe)
    members = _check_orthogonal(S, T)
    lattice = tf.lattice
    s = lattice.big_join(coz_of(f) for f in S)
    t = lattice.big_join(coz_of(g) for g in T)
    if (s & lattice.complement_of(t)) != s:
        raise InvariantViolation("s ∧ t′ = s", s)
    for position, f in enumerate(members):
        rest = members[:position] + members[position + 1 :]
        if (coz_of(f) & lattice.big_meet(zero_of(g) for g in rest)) != coz_of(f):
            raise InvariantViolation("coz(f) ∧ ⋀ z(g) = coz(f)", f)
        if (zero_of(f) | lattice.big_join(coz_of(g) for g in rest)) != zero_of(f):
            raise InvariantViolation("z(f) ∨ ⋁ coz(g) = z(f)", f)
    return s, t


def _verify_separation(h: StepFunction, S: list[StepFunction], T: list[StepFunction]) -> None:
    for g in T:
        if not (h * g).is_zero:
            raise InvariantViolation("h·g = 0 on T", g)
    for f in S:
        if h * f != f * f:
            raise InvariantViolation("h·f = f² on S", f)


def separating_element(
    S: Iterable[StepFunction],
    T: Iterable[StepFunction],
    topoframe: Topoframe | None = None,
) -> StepFunction:
    """
    h with h ∈ Ann(T) and h·f = f² for f ∈ S, for disjoint S, T whose union
    is orthogonal. Nonzero values keep the joined carriers of S; the value 0
    sits on the complement of s = ⋁ coz(f).
    """
    S, T = list(S), list(T)
    tf = common_topoframe(S + T, topoframe)
    cover, _ = orthogonal_geometry(S, T, tf)
    lattice = tf.lattice
    values = sorted({value for f in S for value in f.values if value != 0})
    pieces = [(value, lattice.big_join(f(points(value)) for f in S)) for value in values]
    pieces.append((Fraction(0), lattice.complement_of(cover)))
    h = StepFunction(tf, pieces)
    _verify_separation(h, S, T)
    return h


def separating_element_ed(
    S: Iterable[StepFunction],
    T: Iterable[StepFunction],
    topoframe: Topoframe | None = None,
) -> StepFunction:
    """
    The separating element built with double pseudocomplements of L, valid
    when L is extremally disconnected and the topoframe is a P-topoframe.
    """
    S, T = list(S), list(T)
    tf = common_topoframe(S + T, topoframe)
    lattice = tf.lattice
    disconnected = is_ed_frame(lattice)
    if not disconnected:
        raise EDHypothesisFailed(disconnected.witness)
    p_check = is_p_topoframe(tf)
    if not p_check:
        raise PreconditionFailed(f"zero element {p_check.witness} is not open")
    _check_orthogonal(S, T)
    star = lattice.pseudocomplement
    cover = lattice.big_join(coz_of(f) for f in S)
    values = sorted({value for f in S for value in f.values if value != 0})
    pieces = [
        (value, star(star(lattice.big_join(f(points(value)) for f in S))))
        for value in values
    ]
    pieces.append((Fraction(0), star(cover)))
    h = StepFunction(tf, pieces)
    _verify_separation(h, S, T)
    return h


def separate(
    S: Iterable[StepFunction],
    T: Iterable[StepFunction],
    topoframe: Topoframe | None = None,
) -> StepFunction:
    """
    An element a ∈ Ann(T) with f²·a = f for every f ∈ S, obtained as the
    quasi-inverse of the separating element.
    """
    S, T = list(S), list(T)
    a = quasi_inverse(separating_element(S, T, topoframe))
    for g in T:
        if not (a * g).is_zero:
            raise InvariantViolation("a·g = 0 on T", g)
    for f in S:
        if f * f * a != f:
            raise InvariantViolation("f²·a = f on S", f)
    return a


def countable_coz_join(
    family: Iterable[StepFunction], topoframe: Topoframe | None = None
) -> StepFunction:
    """A function whose cozero element is the join of the family's cozeros."""
    family = list(family)
    tf = common_topoframe(family, topoframe)
    lattice = tf.lattice
    cover = lattice.big_join(coz_of(f) for f in family)
    result = characteristic(tf, cover)
    if coz_of(result) != cover:
        raise InvariantViolation("coz of result = join of cozeros", cover)
    if zero_of(result) != lattice.big_meet(zero_of(f) for f in family):
        raise InvariantViolation("z of result = meet of zeros", cover)
    return result


def atom_values(f: StepFunction) -> tuple[Fraction, ...]:
    """The value of f on each atom of the clopen algebra, in atom order."""
    return tuple(
        next(value for value, carrier in f.pieces if atom <= carrier)
        for atom in f.topoframe.clopen_algebra.atoms
    )


def from_atom_values(tf: Topoframe, values: Sequence[RationalLike]) -> StepFunction:
    atoms = tf.clopen_algebra.atoms
    if len(values) != len(atoms):
        raise ValueError(f"Expected {len(atoms)} atom values, got {len(values)}.")
    return StepFunction(tf, zip(values, atoms))


def enumerate_functions(
    tf: Topoframe, pool: Sequence[RationalLike] = DEFAULT_POOL
) -> Iterable[StepFunction]:
    """Every function whose atom values come from ``pool``."""
    for values in product(pool, repeat=len(tf.clopen_algebra.atoms)):
        yield from_atom_values(tf, values)


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 6))


def random_function(
    tf: Topoframe,
    rng: random.Random,
    pool: Sequence[RationalLike] = DEFAULT_POOL,
) -> StepFunction:
    """Atom values drawn half from ``pool`` and half as random rationals."""
    values = [
        rng.choice(pool) if rng.random() < 0.5 else random_rational(rng)
        for _ in tf.clopen_algebra.atoms
    ]
    return from_atom_values(tf, values)


def interval_continuity_check(
    f: StepFunction, endpoints: Iterable[RationalLike] | None = None
) -> PropertyCheck:
    """The definitional check: f(]p,q[) is open for sampled rationals p < q."""
    if endpoints is None:
        half = Fraction(1, 2)
        endpoints = {edge for value in f.values for edge in (value - half, value, value + half)}
    ordered = sorted({as_rational(point) for point in endpoints})
    checked = 0
    for p, q in combinations(ordered, 2):
        checked += 1
        if evaluate(f, open_interval(p, q)) not in f.topoframe.tau:
            return PropertyCheck(False, witness=(p, q))
    return PropertyCheck(True, evidence=checked)
