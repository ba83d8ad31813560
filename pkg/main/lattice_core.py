"""
Exact finite frames.

Every lattice here is finite, bounded and distributive, which makes it a frame:
arbitrary joins are finite folds and the binary distributive law gives the
infinite one. Elements are handles into their parent lattice; the order is
stored as one bitmask per element (bit ``j`` of ``below[i]`` is set iff
element ``j`` lies below element ``i``) and meets and joins are precomputed.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Any
from typing import Hashable
from typing import Iterable
from typing import Iterator
from typing import Sequence

from .exceptions import ComplementRequested
from .exceptions import MixedLattices
from .exceptions import NotALattice
from .exceptions import NotAPartialOrder
from .exceptions import NotAPoset
from .exceptions import NotDistributive
from .exceptions import ValidationError

logger = logging.getLogger(__name__)


def _bits(mask: int) -> Iterator[int]:
    index = 0
    while mask:
        if mask & 1:
            yield index
        mask >>= 1
        index += 1


def format_node_set(mask: int) -> str:
    """Render a bitmask of 1-based nodes in the document syntax, e.g. ``{1,3}``."""
    return "{" + ",".join(str(node + 1) for node in _bits(mask)) + "}"


@dataclass(frozen=True)
class Poset:
    """
    A finite poset on the nodes ``1..size`` given by its cover pairs.
    """

    size: int
    covers: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        if self.size < 0:
            raise NotAPoset("size must not be negative")
        normalised = frozenset((int(lower), int(upper)) for lower, upper in self.covers)
        object.__setattr__(self, "covers", normalised)
        for lower, upper in normalised:
            if not (1 <= lower <= self.size and 1 <= upper <= self.size):
                raise NotAPoset(f"cover ({lower}, {upper}) is out of range")
            if lower == upper:
                raise NotAPoset(f"cover ({lower}, {upper}) is a loop")
        # Computing the closure detects cycles.
        self.down_masks  # noqa: B018

    @classmethod
    def antichain(cls, size: int) -> "Poset":
        return cls(size)

    @classmethod
    def chain(cls, size: int) -> "Poset":
        return cls(size, frozenset((node, node + 1) for node in range(1, size)))

    @cached_property
    def down_masks(self) -> tuple[int, ...]:
        """Reflexive-transitive closure: bitmask of the nodes below each node."""
        masks = [1 << node for node in range(self.size)]
        changed = True
        while changed:
            changed = False
            for lower, upper in self.covers:
                merged = masks[upper - 1] | masks[lower - 1]
                if merged != masks[upper - 1]:
                    masks[upper - 1] = merged
                    changed = True
        for lower, upper in self.covers:
            if masks[lower - 1] >> (upper - 1) & 1:
                raise NotAPoset(f"cover relation has a cycle through {lower} and {upper}")
        return tuple(masks)

    def is_downset(self, mask: int) -> bool:
        return all(self.down_masks[node] & ~mask == 0 for node in _bits(mask))


class Element:
    """
    An opaque handle on an element of one particular lattice.

    Comparison operators follow the lattice order, ``&`` is the meet and ``|``
    the join. Operands from different lattices raise MixedLattices.
    """

    __slots__ = ("lattice", "index")

    def __init__(self, lattice: "Lattice", index: int):
        self.lattice = lattice
        self.index = index

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Element)
            and self.lattice is other.lattice
            and self.index == other.index
        )

    def __hash__(self) -> int:
        return hash(self.index)

    def __le__(self, other: "Element") -> bool:
        return self.lattice.leq(self, other)

    def __lt__(self, other: "Element") -> bool:
        return self != other and self.lattice.leq(self, other)

    def __ge__(self, other: "Element") -> bool:
        return self.lattice.leq(other, self)

    def __gt__(self, other: "Element") -> bool:
        return self != other and self.lattice.leq(other, self)

    def __and__(self, other: "Element") -> "Element":
        return self.lattice.meet(self, other)

    def __or__(self, other: "Element") -> "Element":
        return self.lattice.join(self, other)

    @property
    def label(self) -> str:
        return self.lattice.labels[self.index]

    def __str__(self) -> str:
        return self.label

    def __repr__(self) -> str:
        return f"Element({self.label!r})"


class Lattice:
    """
    A validated finite distributive lattice.

    Instances are immutable once constructed. Build them with
    ``build_from_order``, ``birkhoff`` or ``Lattice.powerset``.
    """

    def __init__(
        self,
        labels: Sequence[str],
        below: Sequence[int],
        *,
        origin: tuple[Any, ...] | None = None,
        masks: Sequence[int] | None = None,
    ):
        size = len(labels)
        if size == 0:
            raise ValidationError("A lattice needs at least one element.")
        full = (1 << size) - 1
        above = [0] * size
        for upper in range(size):
            for lower in _bits(below[upper]):
                above[lower] |= 1 << upper
        by_below = {mask: index for index, mask in enumerate(below)}
        by_above = {mask: index for index, mask in enumerate(above)}

        meets = [[0] * size for _ in range(size)]
        joins = [[0] * size for _ in range(size)]
        for a in range(size):
            for b in range(a, size):
                meet = by_below.get(below[a] & below[b])
                if meet is None:
                    raise NotALattice(labels[a], labels[b], "meet")
                join = by_above.get(above[a] & above[b])
                if join is None:
                    raise NotALattice(labels[a], labels[b], "join")
                meets[a][b] = meets[b][a] = meet
                joins[a][b] = joins[b][a] = join

        for a in range(size):
            meet_row = meets[a]
            for b in range(size):
                meet_ab = meet_row[b]
                join_row = joins[b]
                for c in range(size):
                    if meet_row[join_row[c]] != joins[meet_ab][meet_row[c]]:
                        raise NotDistributive(labels[a], labels[b], labels[c])

        self.labels: tuple[str, ...] = tuple(labels)
        self.origin = origin
        self.masks: tuple[int, ...] | None = tuple(masks) if masks is not None else None
        self._below = tuple(below)
        self._above = tuple(above)
        self._meets = tuple(tuple(row) for row in meets)
        self._joins = tuple(tuple(row) for row in joins)
        self._by_label = {label: index for index, label in enumerate(self.labels)}
        self.elements: tuple[Element, ...] = tuple(
            Element(self, index) for index in range(size)
        )
        self.bottom = self.elements[above.index(full)]
        self.top = self.elements[below.index(full)]

    @classmethod
    def powerset(cls, points: int) -> "Lattice":
        """The Boolean lattice of subsets of ``{1..points}``; index = bitmask."""
        return birkhoff(Poset.antichain(points), origin=("powerset", points, ()))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Element]:
        return iter(self.elements)

    def __repr__(self) -> str:
        return f"<Lattice of {len(self)} elements>"

    def signature(self) -> tuple[tuple[str, ...], tuple[int, ...]]:
        """Structural identity: equal signatures mean identical lattices."""
        return self.labels, self._below

    def element(self, label: str) -> Element:
        try:
            return self.elements[self._by_label[label]]
        except KeyError:
            raise KeyError(f"No element labelled {label}") from None

    def _check(self, *elements: Element) -> None:
        for element in elements:
            if element.lattice is not self:
                raise MixedLattices(element, self)

    def leq(self, a: Element, b: Element) -> bool:
        self._check(a, b)
        return bool(self._below[b.index] >> a.index & 1)

    def meet(self, a: Element, b: Element) -> Element:
        self._check(a, b)
        return self.elements[self._meets[a.index][b.index]]

    def join(self, a: Element, b: Element) -> Element:
        self._check(a, b)
        return self.elements[self._joins[a.index][b.index]]

    def big_join(self, elements: Iterable[Element]) -> Element:
        """Join of a finite family; the empty join is the bottom element."""
        result = self.bottom.index
        for element in elements:
            self._check(element)
            result = self._joins[result][element.index]
        return self.elements[result]

    def big_meet(self, elements: Iterable[Element]) -> Element:
        """Meet of a finite family; the empty meet is the top element."""
        result = self.top.index
        for element in elements:
            self._check(element)
            result = self._meets[result][element.index]
        return self.elements[result]

    @cached_property
    def _pseudocomplements(self) -> tuple[int, ...]:
        bottom = self.bottom.index
        table = []
        for a in range(len(self)):
            result = bottom
            for x in range(len(self)):
                if self._meets[x][a] == bottom:
                    result = self._joins[result][x]
            table.append(result)
        return tuple(table)

    def pseudocomplement(self, a: Element) -> Element:
        """The largest x with x ∧ a = ⊥."""
        self._check(a)
        return self.elements[self._pseudocomplements[a.index]]

    def is_complemented(self, a: Element) -> bool:
        return self.join(a, self.pseudocomplement(a)) == self.top

    def complement_of(self, a: Element) -> Element:
        if not self.is_complemented(a):
            raise ComplementRequested(a)
        return self.pseudocomplement(a)

    def complemented_elements(self) -> tuple[Element, ...]:
        return tuple(element for element in self.elements if self.is_complemented(element))

    @cached_property
    def _lower_covers(self) -> tuple[tuple[int, ...], ...]:
        covers = []
        for upper in range(len(self)):
            strictly_below = self._below[upper] & ~(1 << upper)
            lower_covers = tuple(
                lower
                for lower in _bits(strictly_below)
                # No element strictly between lower and upper.
                if all(
                    middle == lower or not self._below[middle] >> lower & 1
                    for middle in _bits(strictly_below)
                )
            )
            covers.append(lower_covers)
        return tuple(covers)

    def lower_covers(self, a: Element) -> tuple[Element, ...]:
        self._check(a)
        return tuple(self.elements[index] for index in self._lower_covers[a.index])

    def upper_covers(self, a: Element) -> tuple[Element, ...]:
        self._check(a)
        return tuple(
            element
            for element in self.elements
            if a.index in self._lower_covers[element.index]
        )

    def atoms(self) -> tuple[Element, ...]:
        """Minimal nonzero elements."""
        return self.upper_covers(self.bottom)

    def join_irreducibles(self) -> tuple[Element, ...]:
        """Elements with exactly one lower cover."""
        return tuple(
            element
            for element in self.elements
            if len(self._lower_covers[element.index]) == 1
        )


def build_from_order(
    elements: Sequence[Hashable],
    leq_pairs: Iterable[tuple[Hashable, Hashable]],
    *,
    origin: tuple[Any, ...] | None = None,
) -> Lattice:
    """
    Validate a partial order given as explicit (lower, upper) pairs and build
    its lattice.

    Raises NotAPartialOrder when the pairs are not reflexive, antisymmetric
    and transitive, NotALattice when some pair lacks a meet or join, and
    NotDistributive with a witness triple otherwise.
    """
    elements = list(elements)
    index = {element: position for position, element in enumerate(elements)}
    if len(index) != len(elements):
        raise NotAPoset("element list contains duplicates")
    below = [0] * len(elements)
    for lower, upper in leq_pairs:
        if lower not in index or upper not in index:
            raise NotAPartialOrder(lower, upper, "membership")
        below[index[upper]] |= 1 << index[lower]

    for position, element in enumerate(elements):
        if not below[position] >> position & 1:
            raise NotAPartialOrder(element, element, "reflexivity")
    for upper in range(len(elements)):
        for lower in _bits(below[upper]):
            if lower != upper and below[lower] >> upper & 1:
                raise NotAPartialOrder(elements[lower], elements[upper], "antisymmetry")
            if below[lower] & ~below[upper]:
                raise NotAPartialOrder(elements[lower], elements[upper], "transitivity")

    return Lattice([str(element) for element in elements], below, origin=origin)


def birkhoff(poset: Poset, *, origin: tuple[Any, ...] | None = None) -> Lattice:
    """
    The lattice of downsets of ``poset`` ordered by inclusion.

    Elements are indexed in increasing bitmask order and labelled in the
    document set syntax, so the downsets of an antichain are exactly the
    subsets with index equal to their bitmask.
    """
    downsets = [mask for mask in range(1 << poset.size) if poset.is_downset(mask)]
    below = [
        sum(1 << position for position, lower in enumerate(downsets) if lower & ~upper == 0)
        for upper in downsets
    ]
    if origin is None:
        origin = ("poset", poset.size, tuple(sorted(poset.covers)))
    logger.debug("Built %d downsets of a %d-node poset", len(downsets), poset.size)
    return Lattice(
        [format_node_set(mask) for mask in downsets],
        below,
        origin=origin,
        masks=downsets,
    )


def join_irreducible_poset(lattice: Lattice) -> tuple[Poset, tuple[Element, ...]]:
    """
    The join-irreducibles of ``lattice`` as a poset; node ``k`` is the
    ``k``-th join-irreducible in index order.
    """
    irreducibles = lattice.join_irreducibles()
    covers = set()
    for lower_position, lower in enumerate(irreducibles):
        for upper_position, upper in enumerate(irreducibles):
            if not lower < upper:
                continue
            if any(lower < middle < upper for middle in irreducibles):
                continue
            covers.add((lower_position + 1, upper_position + 1))
    return Poset(len(irreducibles), frozenset(covers)), irreducibles


def birkhoff_isomorphism(lattice: Lattice) -> dict[Element, Element]:
    """
    The map from the downset lattice of the join-irreducibles back onto
    ``lattice`` (a downset goes to the join of its members), checked to be an
    order isomorphism.
    """
    poset, irreducibles = join_irreducible_poset(lattice)
    downsets = birkhoff(poset)
    assert downsets.masks is not None
    mapping = {
        downset: lattice.big_join(irreducibles[node] for node in _bits(mask))
        for downset, mask in zip(downsets.elements, downsets.masks)
    }
    if len(set(mapping.values())) != len(lattice) or len(mapping) != len(lattice):
        raise ValidationError("Downsets of join-irreducibles are not in bijection with the lattice.")
    for first, first_image in mapping.items():
        for second, second_image in mapping.items():
            if (first <= second) != (first_image <= second_image):
                raise ValidationError(
                    f"Birkhoff map does not preserve the order at {first}, {second}."
                )
    return mapping
