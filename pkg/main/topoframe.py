"""
Topoframes: a finite frame together with a subframe of complemented "open"
elements, plus the closure, interior and semi-Heyting operators and the
extremal-disconnectedness, P-ness and complete-regularity checks.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Any
from typing import Iterable

from .exceptions import NotComplemented
from .exceptions import NotSubframe
from .lattice_core import Element
from .lattice_core import Lattice

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PropertyCheck:
    """
    The outcome of a property checker.

    ``witness`` holds a counterexample when the property fails and, for
    constructive properties, the verified object when it holds. ``evidence``
    counts or lists what was examined. Truthy iff the property holds.
    """

    holds: bool
    witness: Any = None
    detail: str = ""
    evidence: Any = None

    def __bool__(self) -> bool:
        return self.holds


class Topoframe:
    """
    A frame ``L`` together with the subframe ``tau`` of open elements.

    Construct through ``validate_topoframe``.
    """

    def __init__(self, lattice: Lattice, tau: Iterable[Element]):
        self.lattice = lattice
        self.opens: tuple[Element, ...] = tuple(sorted(set(tau), key=lambda e: e.index))
        self.tau = frozenset(self.opens)
        self.closed = frozenset(lattice.complement_of(open_) for open_ in self.opens)

    def __repr__(self) -> str:
        opens = " ".join(str(open_) for open_ in self.opens)
        return f"<Topoframe tau=[{opens}] on {self.lattice!r}>"

    def signature(self) -> tuple[Any, tuple[int, ...]]:
        return self.lattice.signature(), tuple(open_.index for open_ in self.opens)

    def is_open(self, p: Element) -> bool:
        return p in self.tau

    def is_closed(self, p: Element) -> bool:
        return p in self.closed

    def closure(self, p: Element) -> Element:
        """
        The smallest closed element above ``p``.

        The meet of complements of opens is the complement of their join, so
        the meet taken in L agrees with the meet among closed elements.
        """
        return self.lattice.big_meet(x for x in self.closed if p <= x)

    def interior(self, p: Element) -> Element:
        """The largest open element below ``p``."""
        return self.lattice.big_join(x for x in self.opens if x <= p)

    def semi_heyting(self, a: Element, b: Element) -> Element:
        """a →τ b: the join of the opens x with a ∧ x ≤ b."""
        return self.lattice.big_join(x for x in self.opens if (a & x) <= b)

    def bot_arrow(self, a: Element) -> Element:
        return self.semi_heyting(a, self.lattice.bottom)

    @cached_property
    def clopen_algebra(self) -> "CloPenAlgebra":
        carrier = tuple(
            open_ for open_ in self.opens if self.lattice.complement_of(open_) in self.tau
        )
        bottom = self.lattice.bottom
        atoms = tuple(
            b
            for b in carrier
            if b != bottom and not any(bottom != c and c < b for c in carrier)
        )
        return CloPenAlgebra(self, carrier, atoms)


@dataclass(frozen=True)
class CloPenAlgebra:
    """
    The Boolean algebra B of clopen elements, in bijection with the
    idempotents of the ring of step functions.
    """

    topoframe: Topoframe
    carrier: tuple[Element, ...]
    atoms: tuple[Element, ...]

    def __contains__(self, element: object) -> bool:
        return element in self.carrier

    def __len__(self) -> int:
        return len(self.carrier)

    def complement(self, b: Element) -> Element:
        return self.topoframe.lattice.complement_of(b)

    def atoms_below(self, b: Element) -> tuple[Element, ...]:
        return tuple(atom for atom in self.atoms if atom <= b)

    def is_complete(self) -> PropertyCheck:
        """
        Every family of clopens has its join among the clopens.

        Families are finite, so the empty join and binary joins suffice.
        """
        lattice = self.topoframe.lattice
        if lattice.bottom not in self:
            return PropertyCheck(False, witness=())
        for family in combinations(self.carrier, 2):
            if lattice.big_join(family) not in self:
                return PropertyCheck(False, witness=family)
        return PropertyCheck(True, evidence=len(self.carrier))


def validate_topoframe(lattice: Lattice, tau_subset: Iterable[Element]) -> Topoframe:
    """
    Check that ``tau_subset`` is a subframe of complemented elements.

    Raises NotSubframe naming the missing bound or the failing meet or join,
    and NotComplemented naming the offending open element.
    """
    tau = set(tau_subset)
    for element in tau:
        lattice._check(element)
    if lattice.bottom not in tau:
        raise NotSubframe("bottom element is not open")
    if lattice.top not in tau:
        raise NotSubframe("top element is not open")
    ordered = sorted(tau, key=lambda e: e.index)
    for position, a in enumerate(ordered):
        for b in ordered[position + 1 :]:
            if (a & b) not in tau:
                raise NotSubframe(f"meet of {a} and {b} is not open", a, b)
            if (a | b) not in tau:
                raise NotSubframe(f"join of {a} and {b} is not open", a, b)
    for element in ordered:
        if not lattice.is_complemented(element):
            raise NotComplemented(element)
    return Topoframe(lattice, ordered)


def is_ed_frame(frame: Lattice | Topoframe) -> PropertyCheck:
    """
    Extremal disconnectedness of a frame: a* ∨ a** = ⊤ for every a.

    Given a Topoframe, the frame examined is tau itself, whose
    pseudocomplement is ``bot_arrow``.
    """
    if isinstance(frame, Topoframe):
        pseudo = frame.bot_arrow
        elements: Iterable[Element] = frame.opens
        top = frame.lattice.top
    else:
        pseudo = frame.pseudocomplement
        elements = frame.elements
        top = frame.top
    for a in elements:
        if (pseudo(a) | pseudo(pseudo(a))) != top:
            return PropertyCheck(False, witness=a)
    return PropertyCheck(True)


def is_ed_topoframe(tf: Topoframe) -> PropertyCheck:
    """The closure of every open element is open."""
    for a in tf.opens:
        closure = tf.closure(a)
        if closure not in tf.tau:
            return PropertyCheck(False, witness=a, detail=f"closure {closure} is not open")
    return PropertyCheck(True)


def zero_part(tf: Topoframe) -> frozenset[Element]:
    """
    Z(L_τ), the zero elements z(f) of all real-continuous functions.

    Every z(f) is the carrier of the value 0 (or ⊥), hence clopen, and every
    clopen b is z(f_{b'}), so the characteristic functions of the clopens
    produce all of Z.
    """
    from . import realfun

    algebra = tf.clopen_algebra
    return frozenset(
        realfun.zero_of(realfun.characteristic(tf, algebra.complement(b)))
        for b in algebra.carrier
    )


def cozero_elements(tf: Topoframe) -> frozenset[Element]:
    from . import realfun

    return frozenset(
        realfun.coz_of(realfun.characteristic(tf, b)) for b in tf.clopen_algebra.carrier
    )


def is_p_topoframe(tf: Topoframe) -> PropertyCheck:
    """Z(L_τ) ⊆ τ, evaluated from the zero elements of actual functions."""
    zeros = zero_part(tf)
    for zero in sorted(zeros, key=lambda e: e.index):
        if zero not in tf.tau:
            return PropertyCheck(False, witness=zero)
    return PropertyCheck(True, evidence=len(zeros))


def is_completely_regular(tf: Topoframe) -> PropertyCheck:
    """Every open element is the join of the cozero (clopen) elements below it."""
    cozeros = cozero_elements(tf)
    for a in tf.opens:
        if tf.lattice.big_join(b for b in cozeros if b <= a) != a:
            return PropertyCheck(False, witness=a)
    return PropertyCheck(True)


def clopen_algebra(tf: Topoframe) -> CloPenAlgebra:
    return tf.clopen_algebra


def completely_regular_reflection(tf: Topoframe) -> Topoframe:
    """
    The topoframe (L, B). Its opens are exactly the cozero elements, so it is
    completely regular, and it carries the same step functions as ``tf``.
    """
    reflection = validate_topoframe(tf.lattice, tf.clopen_algebra.carrier)
    logger.debug(
        "Completely regular reflection keeps %d of %d opens",
        len(reflection.opens),
        len(tf.opens),
    )
    return reflection
