from serre_modules.management.base import SerreCommand
from serre_modules.pipeline import relation_reports
from serre_modules.serializers import RelationReportSerializer


class Command(SerreCommand):
    help = 'Check the Chevalley and q-Serre relations of a module'

    def add_arguments(self, parser):
        self.add_spec_arguments(parser)

    def handle(self, *args, **options):
        spec = self.load_spec(options['spec'], options['q'])
        reports = self.guard(relation_reports, spec)
        self.emit({name: RelationReportSerializer(r).data for name, r in reports.items()})
