from django.test import SimpleTestCase, override_settings

from serre_modules.exceptions import CapExceeded, InvalidParameter
from serre_modules.uqrep import evaluation_module
from serre_modules.words import (
    Signature,
    Word,
    all_words,
    count_row,
    count_table,
    enumerate_irreducible,
    irreducible_compositions,
    is_irreducible_unimodal,
    is_reducible,
    signature,
    spanning_check,
)

from .battery import analysis_for, spec


class SignatureTestCase(SimpleTestCase):
    """Test run-length signatures of words"""

    def test_signatures(self):
        self.assertEqual(signature('yxxyyx'), Signature((1, 2, 2, 1), 'y'))
        self.assertEqual(signature('xyyxxy').parts, (1, 2, 2, 1))
        self.assertEqual(signature(''), Signature(()))
        self.assertEqual(signature(Word('xxx')), Signature((3,), 'x'))

    def test_parts_sum_to_the_length(self):
        for w in all_words(6):
            with self.subTest(word=str(w)):
                self.assertEqual(sum(signature(w).parts), len(w))

    def test_word_validation_and_mirror(self):
        with self.assertRaises(InvalidParameter):
            Word('xz')
        self.assertEqual(Word('xyy').mirror(), Word('yxx'))
        self.assertEqual(str(Word('yx')), 'yx')


class ReducibilityTestCase(SimpleTestCase):
    """Test the reducibility pattern and its unimodal characterization"""

    def test_short_words_are_irreducible(self):
        for n in range(4):
            for w in all_words(n):
                with self.subTest(word=str(w)):
                    self.assertFalse(is_reducible(w))

    def test_length_four(self):
        reducible = [str(w) for w in all_words(4) if is_reducible(w)]
        self.assertEqual(reducible, ['xyxx', 'yxyy'])

    def test_pattern_matches_unimodality(self):
        for n in range(11):
            for w in all_words(n):
                with self.subTest(word=str(w)):
                    self.assertNotEqual(is_reducible(w), is_irreducible_unimodal(w))

    def test_unimodal_examples(self):
        self.assertTrue(is_irreducible_unimodal(''))
        self.assertTrue(is_irreducible_unimodal('xyyxxxyy'))
        self.assertFalse(is_irreducible_unimodal('xxyxx'))

    def test_mirror_preserves_reducibility(self):
        for w in all_words(7):
            with self.subTest(word=str(w)):
                self.assertEqual(is_reducible(w), is_reducible(w.mirror()))


class EnumerationTestCase(SimpleTestCase):
    """Test irreducible word enumeration and counting"""

    def test_counts(self):
        scenarios = [
            {'n': 0, 'count': 1},
            {'n': 3, 'count': 8},
            {'n': 4, 'count': 14},
            {'n': 5, 'count': 24},
        ]
        for scenario in scenarios:
            with self.subTest(n=scenario['n']):
                self.assertEqual(len(enumerate_irreducible(scenario['n'])), scenario['count'])

    def test_lexicographic_order(self):
        words = [str(w) for w in enumerate_irreducible(3)]
        self.assertEqual(words, sorted(words))
        self.assertEqual(words[0], 'xxx')

    def test_counts_match_compositions(self):
        for n in range(1, 10):
            with self.subTest(n=n):
                self.assertEqual(len(enumerate_irreducible(n)), 2 * len(irreducible_compositions(n)))

    def test_count_row(self):
        self.assertEqual(count_row(4), {'n': 4, 'irreducible': 14, 'total': 16, 'equivalence': True})

    def test_count_table(self):
        table = count_table(5)
        self.assertEqual([row['irreducible'] for row in table], [1, 2, 4, 8, 14, 24])
        self.assertEqual([row['total'] for row in table], [1, 2, 4, 8, 16, 32])

    @override_settings(SERRE_WORD_CAP=5)
    def test_cap_from_settings(self):
        self.assertEqual(len(enumerate_irreducible(5)), 24)
        with self.assertRaises(CapExceeded):
            enumerate_irreducible(6)
        with self.assertRaises(CapExceeded):
            count_row(6)

    def test_explicit_cap_and_negative_length(self):
        with self.assertRaises(CapExceeded):
            enumerate_irreducible(4, cap=3)
        with self.assertRaises(InvalidParameter):
            enumerate_irreducible(-1)


class SpanningTestCase(SimpleTestCase):
    """Test that irreducible words span the word images in modules"""

    def test_evaluation_module(self):
        self.assertTrue(spanning_check(evaluation_module(1, 1, 2), 6))

    def test_battery_modules(self):
        for module_spec in [spec(2, (2, 3)), spec(2, (1, 1), (1, 3)), spec(2, (1, '9/2'))]:
            with self.subTest(spec=str(module_spec)):
                rep, pair, _ = analysis_for(module_spec)
                self.assertTrue(spanning_check(rep, 5, pair=pair))

    def test_short_words_span_trivially(self):
        self.assertTrue(spanning_check(evaluation_module(2, 3, 2), 3))

    @override_settings(SERRE_SPANNING_CAP=4)
    def test_cap_from_settings(self):
        with self.assertRaises(CapExceeded):
            spanning_check(evaluation_module(1, 1, 2), 5)
