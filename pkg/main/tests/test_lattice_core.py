from itertools import combinations

from django.test import SimpleTestCase

from main.exceptions import ComplementRequested
from main.exceptions import MixedLattices
from main.exceptions import NotALattice
from main.exceptions import NotAPartialOrder
from main.exceptions import NotAPoset
from main.exceptions import NotDistributive
from main.lattice_core import Lattice
from main.lattice_core import Poset
from main.lattice_core import birkhoff
from main.lattice_core import birkhoff_isomorphism
from main.lattice_core import build_from_order
from main.lattice_core import join_irreducible_poset

M3_PAIRS = [(1, 2), (1, 3), (1, 4), (2, 5), (3, 5), (4, 5)]


def _order(elements, strict_pairs):
    return [(e, e) for e in elements] + list(strict_pairs)


def all_small_posets(max_nodes=4):
    """Every relation i < j on up to ``max_nodes`` nodes, closed transitively by Poset."""
    for size in range(max_nodes + 1):
        pairs = list(combinations(range(1, size + 1), 2))
        for selection in range(1 << len(pairs)):
            yield Poset(
                size,
                frozenset(pair for bit, pair in enumerate(pairs) if selection >> bit & 1),
            )


class PowersetTests(SimpleTestCase):
    def test_labels_follow_subset_bitmasks(self):
        lattice = Lattice.powerset(2)

        self.assertEqual(lattice.labels, ("{}", "{1}", "{2}", "{1,2}"))
        self.assertEqual(lattice.bottom.label, "{}")
        self.assertEqual(lattice.top.label, "{1,2}")

    def test_meet_and_join_are_intersection_and_union(self):
        lattice = Lattice.powerset(2)
        one, two = lattice.element("{1}"), lattice.element("{2}")

        self.assertEqual(one & two, lattice.bottom)
        self.assertEqual(one | two, lattice.top)
        self.assertTrue(one <= lattice.top)
        self.assertFalse(one <= two)

    def test_empty_families(self):
        lattice = Lattice.powerset(3)

        self.assertEqual(lattice.big_join([]), lattice.bottom)
        self.assertEqual(lattice.big_meet([]), lattice.top)

    def test_every_element_is_complemented(self):
        lattice = Lattice.powerset(3)

        self.assertEqual(len(lattice.complemented_elements()), 8)
        self.assertEqual(lattice.complement_of(lattice.element("{1,3}")).label, "{2}")

    def test_atoms_and_covers(self):
        lattice = Lattice.powerset(3)

        self.assertEqual([atom.label for atom in lattice.atoms()], ["{1}", "{2}", "{3}"])
        self.assertEqual(
            {element.label for element in lattice.lower_covers(lattice.top)},
            {"{1,2}", "{1,3}", "{2,3}"},
        )
        self.assertEqual(
            {element.label for element in lattice.upper_covers(lattice.element("{1}"))},
            {"{1,2}", "{1,3}"},
        )

    def test_zero_points_give_the_one_element_lattice(self):
        lattice = Lattice.powerset(0)

        self.assertEqual(len(lattice), 1)
        self.assertEqual(lattice.bottom, lattice.top)


class BirkhoffTests(SimpleTestCase):
    def test_chain_downsets(self):
        lattice = birkhoff(Poset.chain(3))

        self.assertEqual(lattice.labels, ("{}", "{1}", "{1,2}", "{1,2,3}"))

    def test_chain_middle_is_not_complemented(self):
        lattice = birkhoff(Poset.chain(2))
        middle = lattice.element("{1}")

        self.assertEqual(lattice.pseudocomplement(middle), lattice.bottom)
        self.assertFalse(lattice.is_complemented(middle))
        with self.assertRaises(ComplementRequested):
            lattice.complement_of(middle)

    def test_join_irreducibles_of_a_powerset_form_an_antichain(self):
        poset, irreducibles = join_irreducible_poset(Lattice.powerset(3))

        self.assertEqual(poset.size, 3)
        self.assertEqual(poset.covers, frozenset())
        self.assertEqual([e.label for e in irreducibles], ["{1}", "{2}", "{3}"])

    def test_isomorphism_round_trip(self):
        lattice = birkhoff(Poset(3, frozenset({(1, 3), (2, 3)})))

        mapping = birkhoff_isomorphism(lattice)

        self.assertEqual(len(mapping), len(lattice))
        self.assertEqual(set(mapping.values()), set(lattice.elements))

    def test_isomorphism_on_every_small_poset(self):
        for poset in all_small_posets(3):
            lattice = birkhoff(poset)
            self.assertEqual(len(birkhoff_isomorphism(lattice)), len(lattice))

    def test_cycles_are_rejected(self):
        with self.assertRaises(NotAPoset):
            Poset(2, frozenset({(1, 2), (2, 1)}))

    def test_out_of_range_covers_are_rejected(self):
        with self.assertRaises(NotAPoset):
            Poset(2, frozenset({(1, 3)}))


class FrameLawTests(SimpleTestCase):
    def test_frame_laws_on_every_small_poset(self):
        for poset in all_small_posets(4):
            lattice = birkhoff(poset)
            star = lattice.pseudocomplement
            for a in lattice:
                self.assertTrue(a <= star(star(a)))
                self.assertEqual(a & star(a), lattice.bottom)
                for b in lattice:
                    self.assertEqual(star(a | b), star(a) & star(b))
                    self.assertEqual(star(star(a & b)), star(star(a)) & star(star(b)))
                    if a <= b:
                        self.assertTrue(star(b) <= star(a))
                    for c in lattice:
                        self.assertEqual(a & (b | c), (a & b) | (a & c))


class BuildFromOrderTests(SimpleTestCase):
    def test_m3_is_not_distributive(self):
        with self.assertRaises(NotDistributive) as context:
            build_from_order([1, 2, 3, 4, 5], _order([1, 2, 3, 4, 5], M3_PAIRS + [(1, 5)]))

        self.assertEqual(len(context.exception.triple), 3)

    def test_n5_is_not_distributive(self):
        strict = [(1, 2), (1, 3), (1, 4), (2, 3), (3, 5), (4, 5), (2, 5), (1, 5)]
        with self.assertRaises(NotDistributive):
            build_from_order([1, 2, 3, 4, 5], _order([1, 2, 3, 4, 5], strict))

    def test_missing_join_is_reported(self):
        with self.assertRaises(NotALattice) as context:
            build_from_order([1, 2, 3], _order([1, 2, 3], [(1, 2), (1, 3)]))

        self.assertEqual(context.exception.operation, "join")

    def test_missing_reflexive_pair_is_reported(self):
        with self.assertRaises(NotAPartialOrder) as context:
            build_from_order(["a", "b"], [("a", "a"), ("a", "b")])

        self.assertEqual(context.exception.law, "reflexivity")

    def test_antisymmetry_is_checked(self):
        with self.assertRaises(NotAPartialOrder) as context:
            build_from_order(["a", "b"], [("a", "a"), ("b", "b"), ("a", "b"), ("b", "a")])

        self.assertEqual(context.exception.law, "antisymmetry")

    def test_transitivity_is_checked(self):
        pairs = _order(["a", "b", "c"], [("a", "b"), ("b", "c")])
        with self.assertRaises(NotAPartialOrder) as context:
            build_from_order(["a", "b", "c"], pairs)

        self.assertEqual(context.exception.law, "transitivity")

    def test_chain_builds(self):
        lattice = build_from_order(["0", "x", "1"], _order(["0", "x", "1"], [("0", "x"), ("x", "1"), ("0", "1")]))

        self.assertEqual(lattice.bottom.label, "0")
        self.assertEqual(lattice.top.label, "1")


class MixedLatticeTests(SimpleTestCase):
    def test_elements_of_different_lattices_do_not_mix(self):
        first, second = Lattice.powerset(1), Lattice.powerset(1)

        with self.assertRaises(MixedLattices):
            first.top & second.top
        self.assertNotEqual(first.top, second.top)
