from main.management.commands._base import LabCommand


class Command(LabCommand):
    help = "Validate a topoframe document."

    def add_arguments(self, parser):
        self.add_document_arguments(parser)

    def handle(self, *args, **options):
        tf, functions = self.load_document(options)
        self.stdout.write(
            f"valid: {len(tf.lattice)} elements, {len(tf.opens)} opens, "
            f"{len(tf.clopen_algebra)} clopens, {len(functions)} functions"
        )
