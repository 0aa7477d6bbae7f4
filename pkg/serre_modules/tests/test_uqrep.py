from fractions import Fraction

from django.test import SimpleTestCase

from serre_modules.exceptions import DimensionMismatch, InvalidParameter, NotAWeightModule
from serre_modules.exactnum import Polynomial
from serre_modules.linalg import Matrix
from serre_modules.uqrep import (
    ModuleSpec,
    UqRep,
    borel_irreducible,
    check_chevalley_relations,
    check_weight_ladders,
    evaluation_module,
    from_spec,
    is_irreducible_rep,
    is_irreducible_spec,
    spec_reducibility_reason,
    tensor,
    trivial_module,
    twist,
    weight_decomposition,
    weight_generating_poly,
)

from .battery import small_battery, spec


class EvaluationModuleTestCase(SimpleTestCase):
    """Test the evaluation modules V(d, a)"""

    def test_generator_entries(self):
        v = evaluation_module(1, 1, 2)
        self.assertEqual(v['K0'], Matrix.diagonal([Fraction(1, 2), 2]))
        self.assertEqual(v['e1p'].entries[0][1], 1)

    def test_ends_of_the_ladder(self):
        for a in [1, Fraction(9, 2), -3]:
            v = evaluation_module(1, a, 2)
            with self.subTest(a=a):
                self.assertFalse(any(v['e0p'].column(1)))
                self.assertFalse(any(v['e1p'].column(0)))

    def test_raising_coefficient(self):
        v = evaluation_module(2, 3, 2)
        self.assertEqual(v['e0p'].entries[1][0], Fraction(3, 2))

    def test_invalid_parameters(self):
        with self.assertRaises(InvalidParameter):
            evaluation_module(0, 1, 2)
        with self.assertRaises(InvalidParameter):
            evaluation_module(1, 0, 2)
        with self.assertRaises(InvalidParameter):
            evaluation_module(1, 1, 1)

    def test_trivial_module(self):
        t = trivial_module(2)
        for name in ['e0p', 'e0m', 'e1p', 'e1m']:
            self.assertEqual(t[name], Matrix.zeros(1))
        self.assertEqual(t['K0'], Matrix.identity(1))
        self.assertEqual(t['K1'], Matrix.identity(1))
        weights = weight_decomposition(t)
        self.assertEqual((weights.diameter, weights.type), (0, (1, 1)))


class TensorProductTestCase(SimpleTestCase):
    """Test tensor products and specs"""

    def test_trivial_factor_is_a_unit(self):
        v = evaluation_module(2, 3, 2)
        self.assertEqual(tensor(v, trivial_module(2)), v)

    def test_dimensions_and_K0(self):
        q = Fraction(2)
        self.assertEqual(tensor(evaluation_module(2, 1, q), evaluation_module(1, 3, q)).dim, 6)
        product = tensor(evaluation_module(1, 1, q), evaluation_module(1, 3, q))
        self.assertEqual(product['K0'], Matrix.diagonal([q ** -2, 1, 1, q ** 2]))

    def test_q_mismatch(self):
        with self.assertRaises(DimensionMismatch):
            tensor(evaluation_module(1, 1, 2), evaluation_module(1, 1, 3))

    def test_from_spec(self):
        self.assertEqual(from_spec(spec(2)), trivial_module(2))
        self.assertEqual(from_spec(spec(2, (1, 5))), evaluation_module(1, 5, 2))
        rep = from_spec(spec(2, (2, 3), (1, Fraction(5, 2))))
        self.assertEqual(rep.dim, 6)
        self.assertEqual(weight_decomposition(rep).dims, [1, 2, 2, 1])

    def test_spec_provenance(self):
        rep = from_spec(spec(2, (1, 1), (2, 3)))
        self.assertEqual(rep.spec, spec(2, (1, 1), (2, 3)))
        self.assertIsNone(twist(rep, 1, 1).spec)

    def test_spec_validation(self):
        with self.assertRaises(InvalidParameter):
            ModuleSpec(Fraction(2), ((1, 0),))
        with self.assertRaises(InvalidParameter):
            ModuleSpec(Fraction(2), ((0, 1),))
        with self.assertRaises(InvalidParameter):
            ModuleSpec(Fraction(-1), ())


class ChevalleyRelationsTestCase(SimpleTestCase):
    """Test the defining relations on constructed and mutated modules"""

    def test_constructed_modules_satisfy_relations(self):
        for module_spec in small_battery():
            with self.subTest(spec=str(module_spec)):
                report = check_chevalley_relations(from_spec(module_spec))
                self.assertTrue(report.all_hold, report.failures())

    def test_report_names_every_relation(self):
        report = check_chevalley_relations(trivial_module(2))
        self.assertTrue(report.all_hold)
        self.assertIn('K0_e0p', report.names())
        self.assertIn('serre_e1m_e0m', report.names())
        self.assertEqual(len(report.names()), 19)

    def test_mutation_breaks_the_conjugation_relation(self):
        v = evaluation_module(1, 1, 2)
        broken = v.replace(e0p=v['e0p'] + Matrix.identity(2))
        report = check_chevalley_relations(broken)
        self.assertFalse(report['K0_e0p'].holds)
        self.assertIsNotNone(report['K0_e0p'].witness_entry)
        self.assertTrue(report['K0_inverse'].holds)

    def test_twisted_modules_satisfy_relations(self):
        v = from_spec(spec(2, (1, 1), (1, 3)))
        for signs in [(1, -1), (-1, 1), (-1, -1)]:
            with self.subTest(signs=signs):
                self.assertTrue(check_chevalley_relations(twist(v, *signs)).all_hold)


class WeightDecompositionTestCase(SimpleTestCase):
    """Test weight spaces, types and ladders"""

    def test_evaluation_modules(self):
        for d in range(1, 5):
            with self.subTest(d=d):
                weights = weight_decomposition(evaluation_module(d, 3, 2))
                self.assertEqual(weights.type, (1, 1))
                self.assertEqual(weights.diameter, d)
                self.assertEqual(weights.dims, [1] * (d + 1))

    def test_twisted_type(self):
        v = evaluation_module(1, 3, 2)
        self.assertEqual(weight_decomposition(twist(v, -1, 1)).type, (-1, 1))
        self.assertEqual(weight_decomposition(twist(v, -1, -1)).type, (-1, -1))

    def test_twist_is_an_involution(self):
        v = evaluation_module(2, 3, 2)
        self.assertEqual(twist(v, 1, 1), v)
        self.assertEqual(twist(twist(v, -1, -1), -1, -1), v)

    def test_invalid_twist(self):
        with self.assertRaises(InvalidParameter):
            twist(trivial_module(2), 2, 1)

    def test_dims_match_generating_polynomial(self):
        for module_spec in small_battery():
            with self.subTest(spec=str(module_spec)):
                weights = weight_decomposition(from_spec(module_spec))
                self.assertEqual(list(weight_generating_poly(module_spec).coefficients), weights.dims)
                self.assertEqual(weights.dims[0], 1)

    def test_K0K1_is_the_type_sign(self):
        rep = from_spec(spec(2, (1, 1), (1, 3)))
        for signs in [(1, 1), (-1, 1), (1, -1)]:
            twisted = twist(rep, *signs)
            with self.subTest(signs=signs):
                self.assertEqual(twisted['K0'] @ twisted['K1'], Matrix.identity(4) * (signs[0] * signs[1]))

    def test_ladders(self):
        rep = from_spec(spec(2, (2, 3), (1, Fraction(5, 2))))
        ladders = check_weight_ladders(rep, weight_decomposition(rep))
        self.assertEqual(ladders, {'e0p': True, 'e1m': True, 'e0m': True, 'e1p': True})

    def test_hand_built_spectrum_outside_the_classification(self):
        zero = Matrix.zeros(2)
        mats = {'e0p': zero, 'e0m': zero, 'e1p': zero, 'e1m': zero,
                'K0': Matrix.diagonal([1, 3]), 'K1': Matrix.identity(2)}
        with self.assertRaises(NotAWeightModule):
            weight_decomposition(UqRep(Fraction(2), 2, mats))


class IrreducibilityTestCase(SimpleTestCase):
    """Test the U_q irreducibility condition and its oracles"""

    def test_spec_condition(self):
        self.assertFalse(is_irreducible_spec(spec(2, (1, 1), (1, 4))))
        self.assertTrue(is_irreducible_spec(spec(2, (1, 1), (1, 3))))
        self.assertTrue(is_irreducible_spec(spec(2, (3, 7))))
        self.assertTrue(is_irreducible_spec(spec(2)))

    def test_reason_names_the_offending_pair(self):
        scenarios = [
            {
                'spec': spec(2, (1, 1), (1, 4)),
                'reason': 'tensor-product irreducibility condition fails: a_2/a_1 = 4/1 = q^2, with d_2 = 1 and d_1 = 1',
            },
            {
                'spec': spec(2, (2, 1), (1, 8)),
                'reason': 'tensor-product irreducibility condition fails: a_2/a_1 = 8/1 = q^3, with d_2 = 1 and d_1 = 2',
            },
            {'spec': spec(2, (1, 1), (1, 3)), 'reason': None},
        ]
        for scenario in scenarios:
            with self.subTest(spec=str(scenario['spec'])):
                self.assertEqual(spec_reducibility_reason(scenario['spec']), scenario['reason'])

    def test_condition_agrees_with_burnside(self):
        for module_spec in [spec(2, (1, 1), (1, 4)), spec(2, (1, 1), (1, 3)), spec(2, (1, 2), (1, Fraction(1, 2)))]:
            with self.subTest(spec=str(module_spec)):
                rep = from_spec(module_spec)
                self.assertEqual(is_irreducible_rep(rep), is_irreducible_spec(module_spec))

    def test_borel_subalgebra_acts_irreducibly(self):
        for module_spec in [spec(2, (2, 1)), spec(2, (1, 1), (1, 3))]:
            with self.subTest(spec=str(module_spec)):
                self.assertTrue(borel_irreducible(from_spec(module_spec)))

    def test_generating_polynomial(self):
        self.assertEqual(weight_generating_poly(spec(2)), Polynomial.one())
        self.assertEqual(weight_generating_poly(spec(2, (2, 1), (1, 3))), Polynomial((1, 2, 2, 1)))
        self.assertEqual(weight_generating_poly(spec(2, (1, 1), (1, 3), (1, 5))), Polynomial((1, 3, 3, 1)))
