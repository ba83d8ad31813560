import random
from itertools import combinations

from django.test import SimpleTestCase
from django.test import tag

from main.exceptions import NotComplemented
from main.exceptions import NotSubframe
from main.fixtures import load_fixture
from main.lattice_core import Lattice
from main.lattice_core import Poset
from main.lattice_core import birkhoff
from main.realfun import random_function
from main.realfun import zero_of
from main.ring_props import instance_functions
from main.spec_io import enumerate_topoframes
from main.topoframe import clopen_algebra
from main.topoframe import completely_regular_reflection
from main.topoframe import cozero_elements
from main.topoframe import is_completely_regular
from main.topoframe import is_ed_frame
from main.topoframe import is_ed_topoframe
from main.topoframe import is_p_topoframe
from main.topoframe import validate_topoframe
from main.topoframe import zero_part


def labels(elements):
    return {element.label for element in elements}


class ValidateTopoframeTests(SimpleTestCase):
    def test_discrete_pair(self):
        lattice = Lattice.powerset(2)

        tf = validate_topoframe(lattice, lattice.elements)

        self.assertEqual(len(tf.opens), 4)
        self.assertEqual(labels(tf.closed), labels(lattice.elements))

    def test_missing_bottom(self):
        lattice = Lattice.powerset(2)

        with self.assertRaises(NotSubframe) as context:
            validate_topoframe(lattice, [lattice.element("{1}"), lattice.top])

        self.assertIn("bottom", context.exception.reason)

    def test_missing_join(self):
        lattice = Lattice.powerset(3)
        opens = [lattice.element(label) for label in ("{}", "{1}", "{2}", "{1,2,3}")]

        with self.assertRaises(NotSubframe) as context:
            validate_topoframe(lattice, opens)

        self.assertEqual(labels(context.exception.pair), {"{1}", "{2}"})

    def test_open_elements_must_be_complemented(self):
        lattice = birkhoff(Poset.chain(2))

        with self.assertRaises(NotComplemented) as context:
            validate_topoframe(lattice, lattice.elements)

        self.assertEqual(context.exception.element.label, "{1}")


class OperatorTests(SimpleTestCase):
    def test_closure_and_interior_on_nested_opens(self):
        tf = load_fixture("three_point_nested").topoframe
        lattice = tf.lattice
        one = lattice.element("{1}")

        self.assertEqual(tf.closure(one).label, "{1,3}")
        self.assertEqual(tf.interior(lattice.element("{1,3}")).label, "{1}")
        self.assertEqual(tf.bot_arrow(one).label, "{2}")
        self.assertEqual(tf.semi_heyting(one, lattice.bottom).label, "{2}")
        self.assertEqual(tf.semi_heyting(one, one), lattice.top)
        self.assertTrue(tf.is_open(one))
        self.assertFalse(tf.is_closed(one))

    @tag("slow")
    def test_operator_identities_on_every_small_topology(self):
        for points in range(5):
            for tf in enumerate_topoframes(points):
                lattice = tf.lattice
                for a in lattice:
                    closure = tf.closure(a)
                    self.assertEqual(lattice.complement_of(closure), tf.bot_arrow(a))
                    self.assertEqual(tf.interior(closure), tf.bot_arrow(tf.bot_arrow(a)))
                    self.assertEqual(tf.interior(a) == a, a in tf.tau)
                    self.assertEqual(closure == a, tf.is_closed(a))
                    self.assertTrue(a <= closure)
                    self.assertTrue(tf.interior(a) <= a)

    @tag("slow")
    def test_de_morgan_over_the_opens(self):
        for points in range(5):
            for tf in enumerate_topoframes(points):
                lattice = tf.lattice
                families = [tf.opens]
                if points < 4:
                    families.extend(
                        family
                        for size in range(len(tf.opens) + 1)
                        for family in combinations(tf.opens, size)
                    )
                else:
                    families.extend(combinations(tf.opens, 2))
                for family in families:
                    self.assertEqual(
                        tf.bot_arrow(lattice.big_join(family)),
                        lattice.big_meet(tf.bot_arrow(a) for a in family),
                    )


class ClopenAlgebraTests(SimpleTestCase):
    def test_discrete_pair_is_its_own_clopen_algebra(self):
        tf = load_fixture("discrete_pair").topoframe
        algebra = clopen_algebra(tf)

        self.assertEqual(len(algebra), 4)
        self.assertEqual(labels(algebra.atoms), {"{1}", "{2}"})
        self.assertTrue(algebra.is_complete())
        self.assertEqual(labels(algebra.atoms_below(tf.lattice.top)), {"{1}", "{2}"})

    def test_nested_opens_have_only_trivial_clopens(self):
        tf = load_fixture("three_point_nested").topoframe

        self.assertEqual(labels(tf.clopen_algebra.carrier), {"{}", "{1,2,3}"})
        self.assertEqual(labels(tf.clopen_algebra.atoms), {"{1,2,3}"})

    def test_zero_part_and_cozeros_equal_the_clopens(self):
        for name in ("discrete_pair", "three_point_nested", "indiscrete_pair", "converse_exhibit"):
            tf = load_fixture(name).topoframe
            carrier = set(tf.clopen_algebra.carrier)
            self.assertEqual(set(zero_part(tf)), carrier)
            self.assertEqual(set(cozero_elements(tf)), carrier)


class PropertyCheckerTests(SimpleTestCase):
    def test_discrete_pair(self):
        tf = load_fixture("discrete_pair").topoframe

        self.assertTrue(is_ed_frame(tf.lattice))
        self.assertTrue(is_ed_frame(tf))
        self.assertTrue(is_ed_topoframe(tf))
        self.assertTrue(is_p_topoframe(tf))
        self.assertTrue(is_completely_regular(tf))

    def test_nested_opens_are_not_extremally_disconnected(self):
        tf = load_fixture("three_point_nested").topoframe

        check = is_ed_topoframe(tf)

        self.assertFalse(check)
        self.assertEqual(check.witness.label, "{1}")
        self.assertIn("{1,3}", check.detail)
        self.assertEqual(is_ed_frame(tf).witness.label, "{1}")
        self.assertTrue(is_ed_frame(tf.lattice))

    def test_nested_opens_are_not_completely_regular(self):
        tf = load_fixture("three_point_nested").topoframe

        check = is_completely_regular(tf)

        self.assertFalse(check)
        self.assertEqual(check.witness.label, "{1}")
        self.assertTrue(is_p_topoframe(tf))

    def test_converse_exhibit_frame_is_not_extremally_disconnected(self):
        tf = load_fixture("converse_exhibit").topoframe

        check = is_ed_frame(tf.lattice)

        self.assertFalse(check)
        self.assertEqual(check.witness.label, "{1}")
        self.assertTrue(is_ed_topoframe(tf))

    @tag("slow")
    def test_every_finite_topoframe_is_p(self):
        for points in range(5):
            for tf in enumerate_topoframes(points):
                self.assertTrue(is_p_topoframe(tf))
                self.assertEqual(bool(is_ed_frame(tf)), bool(is_ed_topoframe(tf)))

    @tag("slow")
    def test_zeros_of_actual_functions_lie_in_the_zero_part(self):
        for points in range(5):
            for tf in enumerate_topoframes(points):
                zeros = zero_part(tf)
                functions = instance_functions(tf, limit=64, rng=random.Random(points))
                functions.extend(random_function(tf, random.Random(points)) for _ in range(20))
                self.assertEqual({zero_of(f) for f in functions}, zeros)
                for f in functions:
                    self.assertIn(zero_of(f), tf.tau)

    def test_reflection_is_completely_regular(self):
        tf = load_fixture("three_point_nested").topoframe

        reflection = completely_regular_reflection(tf)

        self.assertTrue(is_completely_regular(reflection))
        self.assertEqual(labels(reflection.opens), {"{}", "{1,2,3}"})
        self.assertEqual(
            labels(reflection.clopen_algebra.atoms), labels(tf.clopen_algebra.atoms)
        )
