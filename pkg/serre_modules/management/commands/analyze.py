from serre_modules.management.base import SerreCommand
from serre_modules.pipeline import analyze
from serre_modules.serializers import AnalysisReportSerializer


class Command(SerreCommand):
    help = 'Analyze a tensor product of evaluation modules and print the report as JSON'

    def add_arguments(self, parser):
        self.add_spec_arguments(parser)
        parser.add_argument('--pretty', action='store_true', help='Print a human readable summary instead of JSON')
        parser.add_argument('--strict', action='store_true', help='Fail with exit code 3 when the module is reducible over U_q')
        parser.add_argument('--timing', action='store_true', help='Include per-stage timings in the report')

    def handle(self, *args, **options):
        spec = self.load_spec(options['spec'], options['q'])
        report = self.guard(analyze, spec, strict=options['strict'], timing=options['timing'])
        data = AnalysisReportSerializer(report).data
        if options['pretty']:
            self.stdout.write(self.summary(data))
        else:
            self.emit(data)

    def summary(self, data):
        spec = data['spec']
        factors = ', '.join(f"V({f['d']}, {f['a']})" for f in spec['factors']) or 'trivial module'
        lines = [
            f"module: {factors} at q = {spec['q']}",
            f"dimension {data['dim']}, type {tuple(data['type'])}, diameter {data['diameter']}",
            f"weight dimensions: {data['weight_dims']}",
            f"Drinfel'd polynomial coefficients: {data['drinfeld']['poly']}",
            f"Chevalley relations: {'ok' if data['chevalley_ok'] else 'FAILED'}",
            f"q-Serre relations: {'ok' if data['qserre_ok'] else 'FAILED'}",
        ]
        if data['aq_skipped_reason']:
            lines.append(f"A_q analysis skipped: {data['aq_skipped_reason']}")
        else:
            verdict = data['aq_verdict']
            state = 'irreducible' if verdict['criterion'] else 'reducible'
            lines.append(f"over A_q: {state} (criterion {verdict['criterion_value']}, algebra dim {verdict['oracle_dim']})")
            if verdict['witness_dim'] is not None:
                lines.append(f"invariant witness of dimension {verdict['witness_dim']}")
            if data['shape'] is not None:
                lines.append(f"shape {data['shape']} factors as {data['factorization']}")
        return '\n'.join(lines)
