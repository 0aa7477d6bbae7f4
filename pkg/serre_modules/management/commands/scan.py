from django.conf import settings
from django.core.management.base import CommandError

from serre_modules.management.base import SerreCommand
from serre_modules.pipeline import scan
from serre_modules.serializers import ScanRowSerializer


class Command(SerreCommand):
    help = 'Scan evaluation parameters a for V(d, a) and print one verdict row per grid point'

    def add_arguments(self, parser):
        parser.add_argument('--d', type=int, required=True)
        parser.add_argument('--a-from', required=True)
        parser.add_argument('--a-to', required=True)
        parser.add_argument('--a-step', default='1')
        parser.add_argument('--q')
        parser.add_argument('--jobs', type=int, default=settings.SERRE_SCAN_JOBS)

    def handle(self, *args, **options):
        if options['d'] + 1 > settings.SERRE_MAX_DIM:
            raise CommandError(f'V(d, a) has dimension d + 1 > SERRE_MAX_DIM = {settings.SERRE_MAX_DIM}', returncode=2)
        rows = self.guard(
            scan,
            options['d'],
            options['a_from'],
            options['a_to'],
            options['a_step'],
            self.default_q(options['q']),
            jobs=options['jobs'],
        )
        self.emit(ScanRowSerializer(rows, many=True).data)
