from django.conf import settings
from django.core.management.base import BaseCommand
from django.core.management.base import CommandError

from main.exceptions import DocumentSyntaxError
from main.exceptions import InvariantViolation
from main.exceptions import LabError
from main.exceptions import ValidationError
from main.fixtures import FIXTURE_DOCUMENTS
from main.fixtures import load_fixture
from main.spec_io import TopoframeDocument
from main.spec_io import describe_error
from main.spec_io import read_document

EXIT_VALIDATION = 1
EXIT_USAGE = 2
EXIT_FAIL = 3


class LabCommand(BaseCommand):
    """
    Shared plumbing: a document given as a file or a named fixture, and the
    translation of library errors into exit codes.
    """

    def add_document_arguments(self, parser):
        parser.add_argument("file", nargs="?", help="Topoframe document to read.")
        parser.add_argument(
            "--fixture",
            choices=sorted(FIXTURE_DOCUMENTS),
            help="Use a named fixture instead of a file.",
        )

    def load_document(self, options) -> TopoframeDocument:
        if bool(options.get("file")) == bool(options.get("fixture")):
            raise CommandError("Pass exactly one of FILE or --fixture.", returncode=EXIT_USAGE)
        try:
            if options.get("fixture"):
                return load_fixture(options["fixture"])
            return read_document(options["file"], settings.TFLAB_DOCUMENT_POINTS)
        except OSError as error:
            raise CommandError(str(error), returncode=EXIT_USAGE) from error
        except (DocumentSyntaxError, ValidationError) as error:
            raise CommandError(describe_error(error), returncode=EXIT_VALIDATION) from error

    def execute(self, *args, **options):
        try:
            return super().execute(*args, **options)
        except InvariantViolation as error:
            raise CommandError(describe_error(error), returncode=EXIT_FAIL) from error
        except (DocumentSyntaxError, ValidationError) as error:
            raise CommandError(describe_error(error), returncode=EXIT_VALIDATION) from error
        except LabError as error:
            raise CommandError(describe_error(error), returncode=EXIT_USAGE) from error
