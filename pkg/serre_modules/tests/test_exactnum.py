from fractions import Fraction

from django.test import SimpleTestCase

from serre_modules.exactnum import (
    Polynomial,
    check_q,
    critical_value,
    format_scalar,
    poly_eval,
    poly_mul,
    qbracket,
    qfactorial,
    to_scalar,
)
from serre_modules.exceptions import InvalidParameter


class ScalarParsingTestCase(SimpleTestCase):
    """Test parsing and formatting of rationals"""

    def test_parses_fraction_strings(self):
        scenarios = [
            {'raw': '9/2', 'expected': Fraction(9, 2)},
            {'raw': '-3/6', 'expected': Fraction(-1, 2)},
            {'raw': '7', 'expected': Fraction(7)},
            {'raw': 4, 'expected': Fraction(4)},
            {'raw': Fraction(2, 3), 'expected': Fraction(2, 3)},
        ]
        for scenario in scenarios:
            with self.subTest(raw=scenario['raw']):
                self.assertEqual(to_scalar(scenario['raw']), scenario['expected'])

    def test_rejects_malformed_input(self):
        for raw in ['1/0', 'abc', '1.5', True, 1.5, None]:
            with self.subTest(raw=raw):
                with self.assertRaises(InvalidParameter):
                    to_scalar(raw)

    def test_rejects_oversized_and_non_ascii_digits(self):
        for raw in ['1' * 5000, '1/' + '7' * 5000, '٣', '１２/5']:
            with self.subTest(length=len(raw)):
                with self.assertRaises(InvalidParameter):
                    to_scalar(raw)
        self.assertEqual(to_scalar('9' * 4000), Fraction(10 ** 4000 - 1))

    def test_format_always_has_denominator(self):
        self.assertEqual(format_scalar(Fraction(-1, 2)), '-1/2')
        self.assertEqual(format_scalar(0), '0/1')
        self.assertEqual(format_scalar(Fraction(6, 4)), '3/2')

    def test_check_q_rejects_degenerate_values(self):
        for q in [0, 1, -1]:
            with self.subTest(q=q):
                with self.assertRaises(InvalidParameter):
                    check_q(q)
        self.assertEqual(check_q('1/2'), Fraction(1, 2))


class QCombinatoricsTestCase(SimpleTestCase):
    """Test q-integers, q-factorials and the critical value"""

    def test_qbracket(self):
        self.assertEqual(qbracket(0, 2), 0)
        self.assertEqual(qbracket(1, 2), 1)
        self.assertEqual(qbracket(2, 2), Fraction(5, 2))
        self.assertEqual(qbracket(3, 2), Fraction(21, 4))

    def test_qbracket_recurrence(self):
        for q in [2, Fraction(3, 2), -3]:
            for n in range(8):
                with self.subTest(q=q, n=n):
                    self.assertEqual(qbracket(n + 1, q), q * qbracket(n, q) + Fraction(q) ** -n)

    def test_qbracket_is_symmetric_in_q(self):
        for n in range(6):
            with self.subTest(n=n):
                self.assertEqual(qbracket(n, 3), qbracket(n, Fraction(1, 3)))

    def test_qfactorial(self):
        self.assertEqual(qfactorial(0, 2), 1)
        self.assertEqual(qfactorial(3, 2), Fraction(105, 8))

    def test_negative_arguments_rejected(self):
        with self.assertRaises(InvalidParameter):
            qbracket(-1, 2)
        with self.assertRaises(InvalidParameter):
            qfactorial(-1, 2)

    def test_critical_value(self):
        self.assertEqual(critical_value(2), Fraction(2, 9))
        self.assertEqual(critical_value(Fraction(1, 2)), Fraction(8, 9))
        self.assertEqual(critical_value(3), Fraction(3, 64))
        self.assertEqual(critical_value(Fraction(3, 2)), Fraction(24, 25))


class PolynomialTestCase(SimpleTestCase):
    """Test exact univariate polynomials"""

    def test_trailing_zeros_are_trimmed(self):
        self.assertEqual(Polynomial((1, 2, 0, 0)).coefficients, (1, 2))
        self.assertEqual(Polynomial((0, 0)).degree, -1)
        self.assertTrue(Polynomial().is_zero())

    def test_multiplication_and_evaluation(self):
        p = Polynomial((1, 1))
        self.assertEqual(poly_mul(p, p), Polynomial((1, 2, 1)))
        self.assertEqual(poly_eval(Polynomial((1, -1)), Fraction(2, 9)), Fraction(7, 9))
        self.assertEqual(Polynomial((1, Fraction(-9, 2)))(Fraction(2, 9)), 0)

    def test_evaluation_is_multiplicative(self):
        polys = [Polynomial((1, -4, 3)), Polynomial((1, Fraction(-9, 2))), Polynomial.geometric(3), Polynomial()]
        for p1 in polys:
            for p2 in polys:
                for z in [0, Fraction(2, 9), Fraction(-7, 5)]:
                    with self.subTest(p1=str(p1), p2=str(p2), z=z):
                        self.assertEqual(poly_eval(poly_mul(p1, p2), z), poly_eval(p1, z) * poly_eval(p2, z))

    def test_division(self):
        quotient, remainder = divmod(Polynomial((1, 2, 2, 1)), Polynomial.geometric(1))
        self.assertEqual(quotient, Polynomial.geometric(2))
        self.assertTrue(remainder.is_zero())

        quotient, remainder = divmod(Polynomial((1, 3, 1)), Polynomial.geometric(2))
        self.assertEqual(quotient, Polynomial.one())
        self.assertEqual(remainder, Polynomial((0, 2)))

    def test_division_by_zero(self):
        with self.assertRaises(InvalidParameter):
            divmod(Polynomial.one(), Polynomial())

    def test_str(self):
        self.assertEqual(str(Polynomial((1, Fraction(-9, 2)))), '1 - 9/2z')
        self.assertEqual(str(Polynomial((0, 0, 1))), 'z^2')
        self.assertEqual(str(Polynomial()), '0')
