from django.core.management.base import CommandError

from main import realfun
from main.management.commands._base import EXIT_USAGE
from main.management.commands._base import LabCommand

UNARY = {
    "neg": realfun.negate,
    "abs": realfun.absolute,
    "quasi-inverse": realfun.quasi_inverse,
}
BINARY = ("add", "mul", "min", "max")
FAMILY = {
    "separate": realfun.separate,
    "separating-element": realfun.separating_element,
}


class Command(LabCommand):
    help = "Apply a ring operation to named functions and print the resulting literal."

    def add_arguments(self, parser):
        self.add_document_arguments(parser)
        parser.add_argument(
            "--op", required=True, choices=[*BINARY, *UNARY, *FAMILY], help="Operation."
        )
        parser.add_argument("--f", dest="first", help="First operand.")
        parser.add_argument("--g", dest="second", help="Second operand.")
        parser.add_argument("--S", dest="kept", default="", help="Comma-separated family S.")
        parser.add_argument("--T", dest="killed", default="", help="Comma-separated family T.")

    def handle(self, *args, **options):
        tf, functions = self.load_document(options)

        def lookup(name):
            if not name:
                raise CommandError(f"--op {options['op']} needs more operands.", returncode=EXIT_USAGE)
            try:
                return functions[name]
            except KeyError:
                raise CommandError(f"No function named {name}", returncode=EXIT_USAGE) from None

        def family(names):
            return [lookup(name.strip()) for name in names.split(",") if name.strip()]

        op = options["op"]
        if op in BINARY:
            result = realfun.ring_op(lookup(options["first"]), lookup(options["second"]), op)
        elif op in UNARY:
            result = UNARY[op](lookup(options["first"]))
        else:
            result = FAMILY[op](family(options["kept"]), family(options["killed"]), tf)
        self.stdout.write(str(result))
