from serre_modules.management.base import SerreCommand
from serre_modules.pipeline import word_counts
from serre_modules.serializers import WordCountSerializer


class Command(SerreCommand):
    help = 'Count irreducible words of each length up to --max-len'

    def add_arguments(self, parser):
        parser.add_argument('--max-len', type=int, required=True)

    def handle(self, *args, **options):
        rows = self.guard(word_counts, options['max_len'])
        self.emit(WordCountSerializer(rows, many=True).data)
