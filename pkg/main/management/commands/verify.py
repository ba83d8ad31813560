from django.conf import settings
from django.core.management.base import CommandError

from main import services
from main.exceptions import BoundExceeded
from main.management.commands._base import EXIT_FAIL
from main.management.commands._base import EXIT_USAGE
from main.management.commands._base import LabCommand
from main.ring_props import FAIL
from main.spec_io import dump_json
from main.spec_io import print_document


class Command(LabCommand):
    help = "Run the theorem harness on a document, a fixture or every enumerated topology."

    def add_arguments(self, parser):
        self.add_document_arguments(parser)
        parser.add_argument(
            "--enumerate",
            type=int,
            metavar="N",
            help="Verify every labelled topology on N points.",
        )
        parser.add_argument(
            "--up-to-isomorphism",
            action="store_true",
            help="Keep one topology per isomorphism class when enumerating.",
        )
        parser.add_argument("--workers", type=int, help="Worker processes (default TFLAB_WORKERS).")
        parser.add_argument("--seed", type=int, help="Sampling seed (default TFLAB_SEED).")
        parser.add_argument("--json", action="store_true", help="Emit JSON reports.")

    def handle(self, *args, **options):
        if options.get("enumerate") is not None:
            if options.get("file") or options.get("fixture"):
                raise CommandError(
                    "--enumerate cannot be combined with FILE or --fixture.",
                    returncode=EXIT_USAGE,
                )
            try:
                documents = services.enumerated_documents(
                    options["enumerate"], options["up_to_isomorphism"]
                )
            except BoundExceeded as error:
                raise CommandError(str(error), returncode=EXIT_USAGE) from error
        else:
            documents = [print_document(self.load_document(options))]

        config = services.LabConfig.from_settings(seed=options.get("seed"))
        workers = options.get("workers") or settings.TFLAB_WORKERS
        results = services.verify_instances(documents, config, workers)

        failures = [
            (result["instance"], verdict["theorem"])
            for result in results
            for verdict in result["theorems"]
            if verdict["status"] == FAIL
        ]
        if options["json"]:
            self.stdout.write(dump_json({"schema": config.schema, "instances": results}))
        else:
            for result in results:
                statuses = " ".join(
                    f"{verdict['theorem']}={verdict['status']}" for verdict in result["theorems"]
                )
                self.stdout.write(f"{result['instance']}: {statuses}")
            self.stdout.write(f"{len(results)} instances, {len(failures)} FAIL")

        if failures:
            raise CommandError(
                "Theorem failures: "
                + ", ".join(f"{theorem} on {instance}" for instance, theorem in failures),
                returncode=EXIT_FAIL,
            )
