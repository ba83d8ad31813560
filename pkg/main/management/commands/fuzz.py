from django.conf import settings
from django.core.management.base import CommandError

from main import services
from main.management.commands._base import EXIT_FAIL
from main.management.commands._base import LabCommand


class Command(LabCommand):
    help = "Check the ring and zero-map laws on random functions of a document."

    def add_arguments(self, parser):
        self.add_document_arguments(parser)
        parser.add_argument("--seed", type=int, help="Random seed (default TFLAB_SEED).")
        parser.add_argument("--count", type=int, default=100, help="Number of random pairs.")

    def handle(self, *args, **options):
        document = self.load_document(options)
        seed = options["seed"] if options.get("seed") is not None else settings.TFLAB_SEED
        result = services.run_fuzz(document, seed, options["count"])
        self.stdout.write(
            f"seed {seed}: checked {result.checked} pairs, {len(result.failures)} failures"
        )
        for law, f, g in result.failures:
            self.stderr.write(f"{law}: f = {f} ; g = {g}")
        if not result.passed:
            raise CommandError("Law failures found.", returncode=EXIT_FAIL)
