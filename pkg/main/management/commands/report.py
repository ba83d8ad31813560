from main import services
from main.management.commands._base import LabCommand
from main.spec_io import render_report_json
from main.spec_io import render_report_text


class Command(LabCommand):
    help = "Compute the property report of a topoframe document."

    def add_arguments(self, parser):
        self.add_document_arguments(parser)
        parser.add_argument("--json", action="store_true", help="Emit the JSON report.")
        parser.add_argument("--seed", type=int, help="Sampling seed (default TFLAB_SEED).")

    def handle(self, *args, **options):
        document = self.load_document(options)
        config = services.LabConfig.from_settings(seed=options.get("seed"))
        report = services.analyse_document(document, config)
        if options["json"]:
            self.stdout.write(render_report_json(report, config.schema))
        else:
            self.stdout.write(render_report_text(report))
