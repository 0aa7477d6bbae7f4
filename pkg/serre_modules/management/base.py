import json
import logging
from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from rest_framework.renderers import JSONRenderer

from serre_modules.exceptions import SerreError
from serre_modules.pipeline import exit_code_for
from serre_modules.serializers import ModuleSpecSerializer

logger = logging.getLogger(__name__)


class SerreCommand(BaseCommand):
    """Shared plumbing: spec parsing, JSON output and error to exit code mapping."""

    def add_spec_arguments(self, parser):
        parser.add_argument('--spec', required=True, help='ModuleSpec JSON inline or @path/to/file.json')
        parser.add_argument('--q', help='q as "p/q"; overrides q in the module spec')

    def load_spec(self, raw, q=None):
        if raw.startswith('@'):
            try:
                raw = Path(raw[1:]).read_text()
            except OSError as exc:
                raise CommandError(f'cannot read spec file: {exc}', returncode=2)
        try:
            data = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise CommandError(f'malformed spec JSON: {exc}', returncode=2)
        if not isinstance(data, dict):
            raise CommandError('spec JSON must be an object', returncode=2)
        if q is not None:
            data['q'] = q
        serializer = ModuleSpecSerializer(data=data)
        if not serializer.is_valid():
            raise CommandError(f'invalid spec: {json.dumps(serializer.errors)}', returncode=2)
        return self.guard(serializer.save)

    def default_q(self, q):
        return q if q is not None else settings.SERRE_DEFAULT_Q

    def guard(self, fn, *args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except SerreError as exc:
            code = exit_code_for(exc)
            if code == 4:
                logger.error('internal consistency failure: %s', exc)
            raise CommandError(str(exc), returncode=code)

    def emit(self, data):
        self.stdout.write(JSONRenderer().render(data).decode())
