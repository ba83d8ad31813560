from django.core.management.base import CommandError

from main.exceptions import DocumentSyntaxError
from main.management.commands._base import EXIT_USAGE
from main.management.commands._base import LabCommand
from main.realfun import evaluate
from main.spec_io import parse_set_descriptor


class Command(LabCommand):
    help = "Evaluate a named function of a document on a set of reals."

    def add_arguments(self, parser):
        self.add_document_arguments(parser)
        parser.add_argument("--fn", required=True, dest="function", help="Function name.")
        parser.add_argument("--set", required=True, dest="subset", help='Set descriptor, e.g. "(1,3)".')

    def handle(self, *args, **options):
        _, functions = self.load_document(options)
        try:
            f = functions[options["function"]]
        except KeyError:
            raise CommandError(
                f"No function named {options['function']}", returncode=EXIT_USAGE
            ) from None
        try:
            subset = parse_set_descriptor(options["subset"])
        except DocumentSyntaxError as error:
            raise CommandError(f"--set: {error}", returncode=EXIT_USAGE) from error
        self.stdout.write(evaluate(f, subset).label)
