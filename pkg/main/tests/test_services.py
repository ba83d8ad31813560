import json
import random
from unittest import mock

from django.test import SimpleTestCase
from django.test import override_settings
from django.test import tag

from main import services
from main.fixtures import FIXTURE_DOCUMENTS
from main.fixtures import load_fixture
from main.ring_props import FAIL
from main.ring_props import PASS
from main.ring_props import TheoremReport
from main.ring_props import TheoremVerdict
from main.spec_io import enumerate_topoframes
from main.spec_io import parse
from main.spec_io import print_document
from main.spec_io import render_report_json


class LabConfigTests(SimpleTestCase):
    @override_settings(TFLAB_SEED=7, TFLAB_FUNCTION_SAMPLE=64)
    def test_reads_settings(self):
        config = services.LabConfig.from_settings()

        self.assertEqual(config.seed, 7)
        self.assertEqual(config.function_limit, 64)

    @override_settings(TFLAB_SEED=0)
    def test_overrides_win_unless_none(self):
        self.assertEqual(services.LabConfig.from_settings(seed=3).seed, 3)
        self.assertEqual(services.LabConfig.from_settings(seed=None).seed, 0)


class AnalyseDocumentTests(SimpleTestCase):
    def test_identifier_follows_the_canonical_text(self):
        first = services.analyse_document(load_fixture("discrete_pair"), services.LabConfig())
        second = services.analyse_document(load_fixture("discrete_pair"), services.LabConfig())

        self.assertEqual(first.instance, second.instance)
        self.assertEqual(first.instance, services.instance_identifier(first.document))

    def test_json_is_byte_stable(self):
        config = services.LabConfig(seed=5)
        first = render_report_json(services.analyse_document(load_fixture("three_point_nested"), config))
        second = render_report_json(services.analyse_document(load_fixture("three_point_nested"), config))

        self.assertEqual(first, second)
        payload = json.loads(first)
        self.assertEqual(payload["schema"], 1)
        self.assertFalse(payload["properties"]["ed_topoframe"]["holds"])
        self.assertTrue(payload["properties"]["regular"]["finite_forced"])
        self.assertEqual(len(payload["theorems"]), 9)


class VerifyInstancesTests(SimpleTestCase):
    def test_results_are_sorted_and_pass(self):
        documents = services.enumerated_documents(2)

        results = services.verify_instances(documents, services.LabConfig())

        self.assertEqual(len(results), 4)
        self.assertEqual(
            [result["instance"] for result in results],
            sorted(result["instance"] for result in results),
        )
        for result in results:
            for verdict in result["theorems"]:
                self.assertNotEqual(verdict["status"], FAIL)

    def test_workers_do_not_change_the_output(self):
        documents = services.enumerated_documents(2)

        serial = services.verify_instances(documents, services.LabConfig())
        parallel = services.verify_instances(documents, services.LabConfig(), workers=2)

        self.assertEqual(serial, parallel)

    @override_settings(TFLAB_MAX_POINTS=3)
    def test_enumeration_up_to_isomorphism(self):
        self.assertEqual(len(services.enumerated_documents(3, up_to_isomorphism=True)), 9)

    @mock.patch("main.services.sentry_sdk.capture_message")
    def test_failures_are_reported(self, capture_message):
        report = TheoremReport((TheoremVerdict("p-topoframe-iff-regular", FAIL),))
        with mock.patch("main.services.verify_theorems", return_value=report):
            with self.assertLogs("main.services", level="ERROR"):
                results = services.verify_instances(
                    [FIXTURE_DOCUMENTS["discrete_pair"]], services.LabConfig()
                )

        self.assertEqual(results[0]["theorems"][0]["status"], FAIL)
        capture_message.assert_called_once()


class RandomDocumentTests(SimpleTestCase):
    def test_random_documents_parse(self):
        rng = random.Random(9)
        for _ in range(20):
            document = parse(services.random_document(rng))
            self.assertEqual(len(document.functions), 2)


class FuzzTests(SimpleTestCase):
    def test_laws_hold_for_a_thousand_pairs_on_small_instances(self):
        for points in range(3):
            for tf in enumerate_topoframes(points):
                document = parse(print_document((tf, {})))
                result = services.run_fuzz(document, seed=points, count=1000)
                self.assertTrue(result.passed, result.failures[:3])
                self.assertEqual(result.checked, 1000)

    @tag("slow")
    def test_laws_hold_for_a_thousand_pairs_on_three_points(self):
        for tf in enumerate_topoframes(3):
            result = services.run_fuzz(parse(print_document((tf, {}))), seed=3, count=1000)
            self.assertTrue(result.passed, result.failures[:3])
            self.assertEqual(result.checked, 1000)

    def test_named_functions_join_the_draw(self):
        result = services.run_fuzz(load_fixture("discrete_pair"), seed=4, count=50)

        self.assertTrue(result.passed)
        self.assertEqual(result.seed, 4)

    def test_seed_determines_the_run(self):
        document = load_fixture("discrete_pair")
        with mock.patch("main.services._ring_laws", return_value={"never": lambda f, g: False}):
            with mock.patch("main.services.sentry_sdk.capture_message") as capture_message:
                with self.assertLogs("main.services", level="ERROR"):
                    first = services.run_fuzz(document, seed=8, count=5)
                    second = services.run_fuzz(document, seed=8, count=5)

        self.assertEqual(first.failures, second.failures)
        self.assertEqual(len(first.failures), 5)
        self.assertFalse(first.passed)
        self.assertEqual(capture_message.call_count, 2)


class VerdictStatusTests(SimpleTestCase):
    def test_fixture_statuses(self):
        results = services.verify_instances(
            [FIXTURE_DOCUMENTS["converse_exhibit"]], services.LabConfig()
        )
        statuses = {verdict["theorem"]: verdict["status"] for verdict in results[0]["theorems"]}

        self.assertEqual(statuses["p-topoframe-iff-regular"], PASS)
        self.assertNotIn(FAIL, statuses.values())
