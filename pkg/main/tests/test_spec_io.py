import random
import tempfile
from fractions import Fraction
from pathlib import Path

from django.test import SimpleTestCase

from main.exceptions import BoundExceeded
from main.exceptions import DocumentSyntaxError
from main.exceptions import DocumentValidationError
from main.exceptions import NotComplemented
from main.exceptions import NotContinuous
from main.exceptions import NotDistributive
from main.exceptions import NotSubframe
from main.fixtures import FIXTURE_DOCUMENTS
from main.fixtures import load_fixture
from main.services import random_document
from main.spec_io import brute_force_topologies
from main.spec_io import enumerate_topoframes
from main.spec_io import parse
from main.spec_io import parse_set_descriptor
from main.spec_io import print_document
from main.spec_io import read_document
from main.spec_io import render_witness

M3_DOCUMENT = """\
order 5
le 1 2
le 1 3
le 1 4
le 2 5
le 3 5
le 4 5
tau 1 5
"""


class ParseTests(SimpleTestCase):
    def test_discrete_pair(self):
        tf, functions = load_fixture("discrete_pair")

        self.assertEqual(len(tf.lattice), 4)
        self.assertEqual(len(tf.opens), 4)
        self.assertEqual(str(functions["f"]), "0@{2} ; 2@{1}")
        self.assertEqual(list(functions), ["f", "g"])

    def test_comments_and_blank_lines(self):
        tf, functions = parse("# header\n\nspace powerset 1   # one point\ntau {} {1}\n")

        self.assertEqual(len(tf.opens), 2)
        self.assertEqual(functions, {})

    def test_poset_lattice(self):
        tf, _ = load_fixture("converse_exhibit")

        self.assertEqual(
            tf.lattice.labels, ("{}", "{1}", "{2}", "{1,2}", "{1,2,3}")
        )

    def test_order_lattice(self):
        tf, _ = parse("order 3\nle 1 2\nle 2 3\ntau 1 3\n")

        self.assertEqual(tf.lattice.labels, ("1", "2", "3"))
        self.assertEqual(tf.lattice.bottom.label, "1")

    def test_m3_is_rejected(self):
        with self.assertRaises(DocumentValidationError) as context:
            parse(M3_DOCUMENT)

        self.assertIsInstance(context.exception.__cause__, NotDistributive)
        self.assertEqual(context.exception.line, 1)

    def test_non_complemented_opens_are_rejected(self):
        with self.assertRaises(DocumentValidationError) as context:
            parse("poset 2\ncover 1 2\ntau {} {1} {1,2}\n")

        self.assertIsInstance(context.exception.__cause__, NotComplemented)
        self.assertEqual(context.exception.line, 3)

    def test_opens_must_form_a_subframe(self):
        with self.assertRaises(DocumentValidationError) as context:
            parse("space powerset 3\ntau {} {1} {2} {1,2,3}\n")

        self.assertIsInstance(context.exception.__cause__, NotSubframe)

    def test_discontinuous_function(self):
        with self.assertRaises(DocumentValidationError) as context:
            parse("space powerset 2\ntau {} {1,2}\nfn f = 2@{1} ; 0@{2}\n")

        self.assertIsInstance(context.exception.__cause__, NotContinuous)
        self.assertEqual(context.exception.line, 3)

    def test_unknown_element_position(self):
        with self.assertRaises(DocumentValidationError) as context:
            parse("space powerset 2\ntau {} {3}\n")

        self.assertEqual((context.exception.line, context.exception.column), (2, 8))

    def test_bad_value_position(self):
        with self.assertRaises(DocumentSyntaxError) as context:
            parse("space powerset 2\ntau {} {1} {2} {1,2}\nfn f = 2@{1} ; x@{2}\n")

        self.assertEqual((context.exception.line, context.exception.column), (3, 16))

    def test_syntax_errors(self):
        documents = [
            "",
            "space powerset x\ntau {}\n",
            "space powerset 1\nbogus\n",
            "space powerset 1\n",
            "space powerset 1\nfn f = 1@{1}\ntau {} {1}\n",
            "space powerset 1\ntau {} {1}\nfn f = 1@{1}\nfn f = 2@{1}\n",
            "space powerset 1\ntau {} {1}\nfn 1f = 1@{1}\n",
            "space powerset 1\ntau {} {1}\nfn f = 1{1}\n",
            "poset 2\nle 1 2\ntau {} {1,2}\n",
            "space powerset 1\ntau {} {1}\ntau {} {1}\n",
        ]
        for text in documents:
            with self.subTest(text=text), self.assertRaises(DocumentSyntaxError):
                parse(text)


class ReadDocumentTests(SimpleTestCase):
    def write_bytes(self, data):
        directory = tempfile.TemporaryDirectory()
        self.addCleanup(directory.cleanup)
        path = Path(directory.name) / "instance.tf"
        path.write_bytes(data)
        return path

    def test_reads_utf8(self):
        path = self.write_bytes("# naïve\nspace powerset 1\ntau {} {1}\n".encode())

        self.assertEqual(len(read_document(path).topoframe.opens), 2)

    def test_invalid_utf8_position(self):
        path = self.write_bytes(b"space powerset 1\ntau {} {1}\n# \xff\xfe\n")

        with self.assertRaises(DocumentSyntaxError) as context:
            read_document(path)

        self.assertEqual((context.exception.line, context.exception.column), (3, 3))
        self.assertIsInstance(context.exception.__cause__, UnicodeDecodeError)

    def test_invalid_utf8_on_the_first_line(self):
        path = self.write_bytes(b"\xc3space powerset 1\n")

        with self.assertRaises(DocumentSyntaxError) as context:
            read_document(path)

        self.assertEqual((context.exception.line, context.exception.column), (1, 1))


class DocumentBoundTests(SimpleTestCase):
    def test_powerset_and_poset_sizes(self):
        for text in ("space powerset 9\ntau {}\n", "poset 9\ntau {}\n"):
            with self.subTest(text=text), self.assertRaises(BoundExceeded) as context:
                parse(text)
            self.assertEqual((context.exception.requested, context.exception.bound), (9, 8))

    def test_order_size(self):
        with self.assertRaises(BoundExceeded) as context:
            parse("order 5\ntau 1 5\n", max_points=2)

        self.assertEqual(context.exception.bound, 4)

    def test_sizes_at_the_bound_parse(self):
        tf, _ = parse("space powerset 2\ntau {} {1,2}\n", max_points=2)

        self.assertEqual(len(tf.lattice), 4)


class PrintDocumentTests(SimpleTestCase):
    def test_fixtures_reach_a_fixed_point(self):
        for name, text in FIXTURE_DOCUMENTS.items():
            document = parse(text)
            canonical = print_document(document)
            again = parse(canonical)
            self.assertEqual(print_document(again), canonical)
            self.assertEqual(again.topoframe.signature(), document.topoframe.signature())

    def test_canonical_text(self):
        self.assertEqual(
            print_document(load_fixture("discrete_pair")),
            "space powerset 2\ntau {} {1} {2} {1,2}\nfn f = 0@{2} ; 2@{1}\nfn g = 3@{1} ; 5@{2}\n",
        )

    def test_random_documents(self):
        rng = random.Random(2024)
        for _ in range(50):
            text = random_document(rng)
            document = parse(text)
            self.assertEqual(print_document(document), text)
            for name, f in document.functions.items():
                self.assertEqual(str(parse(text).functions[name]), str(f))


class SetDescriptorParseTests(SimpleTestCase):
    def test_membership(self):
        cases = [
            ("(1,3)", [2], [1, 3]),
            ("[0,1] | {5}", [0, 1, 5], [2]),
            ("~{0}", [1, -1], [0]),
            ("R & ~(0,inf)", [0, -1], [1]),
            ("(-inf,0]", [0, -7], ["1/2"]),
            ("{1/2, 3}", ["1/2", 3], [0]),
            ("{1} | {2} & {3}", [1], [2, 3]),
            ("~{1} & {1}", [], [1]),
            ("~({1} | {2})", [3], [1, 2]),
            ("{}", [], [0]),
        ]
        for text, inside, outside in cases:
            subset = parse_set_descriptor(text)
            for value in inside:
                with self.subTest(text=text, value=value):
                    self.assertIn(Fraction(value), subset)
            for value in outside:
                with self.subTest(text=text, value=value):
                    self.assertNotIn(Fraction(value), subset)

    def test_errors(self):
        for text in ("(1,3", "R &", "{x}", "(1,3) )", "", "| R"):
            with self.subTest(text=text), self.assertRaises(DocumentSyntaxError):
                parse_set_descriptor(text)


class EnumerationTests(SimpleTestCase):
    def test_labelled_topology_counts(self):
        counts = [sum(1 for _ in enumerate_topoframes(n)) for n in range(5)]

        self.assertEqual(counts, [1, 1, 4, 29, 355])

    def test_enumeration_matches_brute_force(self):
        for n in range(5):
            enumerated = {frozenset(open_.index for open_ in tf.opens) for tf in enumerate_topoframes(n)}
            self.assertEqual(enumerated, set(brute_force_topologies(n)))

    def test_counts_up_to_isomorphism(self):
        counts = [
            sum(1 for _ in enumerate_topoframes(n, up_to_isomorphism=True)) for n in range(1, 5)
        ]

        self.assertEqual(counts, [1, 3, 9, 33])

    def test_bound(self):
        with self.assertRaises(BoundExceeded):
            list(enumerate_topoframes(5))

    def test_subframes_of_a_given_lattice(self):
        lattice = load_fixture("converse_exhibit").topoframe.lattice

        topoframes = list(enumerate_topoframes(lattice=lattice))

        self.assertEqual(len(topoframes), 1)
        self.assertEqual([open_.label for open_ in topoframes[0].opens], ["{}", "{1,2,3}"])

    def test_every_enumerated_topoframe_prints(self):
        for tf in enumerate_topoframes(2):
            text = print_document((tf, {}))
            self.assertEqual(parse(text).topoframe.signature(), tf.signature())


class RenderWitnessTests(SimpleTestCase):
    def test_rendering(self):
        tf, functions = load_fixture("discrete_pair")

        self.assertEqual(render_witness(tf.lattice.top), "{1,2}")
        self.assertEqual(render_witness(functions["f"]), "0@{2} ; 2@{1}")
        self.assertEqual(render_witness((1, None, True)), [1, None, True])
        self.assertEqual(render_witness({"a": tf.lattice.bottom}), {"a": "{}"})
