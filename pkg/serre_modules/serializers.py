from math import prod

from django.conf import settings
from rest_framework import serializers

from .exactnum import format_scalar, to_scalar
from .exceptions import InvalidParameter
from .uqrep import ModuleSpec


class ScalarField(serializers.Field):
    """Exact rational rendered as "p/q"; accepts "p/q" strings and integers."""

    default_error_messages = {
        'invalid': 'Expected a rational number written as "p/q" or an integer.',
    }

    def to_representation(self, value):
        return format_scalar(value)

    def to_internal_value(self, data):
        try:
            return to_scalar(data)
        except InvalidParameter:
            self.fail('invalid')


class FactorInput(serializers.Serializer):
    d = serializers.IntegerField(min_value=1)
    a = ScalarField()

    def validate_a(self, value):
        if value == 0:
            raise serializers.ValidationError('evaluation parameter a must be nonzero')
        return value


class ModuleSpecSerializer(serializers.Serializer):
    q = ScalarField(required=False)
    factors = FactorInput(many=True)

    def validate_q(self, value):
        if value == 0 or abs(value) == 1:
            raise serializers.ValidationError('q must satisfy q != 0 and |q| != 1')
        return value

    def validate(self, data):
        if 'q' not in data:
            data['q'] = to_scalar(settings.SERRE_DEFAULT_Q)
        dim = prod(f['d'] + 1 for f in data['factors'])
        if dim > settings.SERRE_MAX_DIM:
            raise serializers.ValidationError(
                f'module dimension {dim} exceeds SERRE_MAX_DIM = {settings.SERRE_MAX_DIM}'
            )
        return data

    def create(self, validated):
        return ModuleSpec(validated['q'], tuple((f['d'], f['a']) for f in validated['factors']))

    def to_representation(self, instance):
        return {
            'q': format_scalar(instance.q),
            'factors': [{'d': f.d, 'a': format_scalar(f.a)} for f in instance.factors],
        }


class MatrixSerializer(serializers.Serializer):
    rows = serializers.IntegerField()
    cols = serializers.IntegerField()
    entries = serializers.SerializerMethodField()

    def get_entries(self, instance):
        return [[format_scalar(a) for a in row] for row in instance.entries]


class RelationReportSerializer(serializers.BaseSerializer):
    def to_representation(self, instance):
        data = {}
        for check in instance.checks:
            entry = None
            if check.witness_entry is not None:
                row, col, value = check.witness_entry
                entry = [row, col, format_scalar(value)]
            data[check.name] = {'holds': check.holds, 'witness_entry': entry}
        return data


class DrinfeldDataSerializer(serializers.Serializer):
    sigma = serializers.ListField(child=ScalarField())
    poly = serializers.SerializerMethodField()
    critical_value = ScalarField()
    critical_eval = ScalarField()
    predicted_aq_irreducible = serializers.SerializerMethodField()

    def get_poly(self, instance):
        return [format_scalar(c) for c in instance.poly.coefficients]

    def get_predicted_aq_irreducible(self, instance):
        if self.context.get('uq_irreducible') is False:
            return None
        return instance.predicted_aq_irreducible


class VerdictSerializer(serializers.Serializer):
    criterion_value = ScalarField()
    criterion = serializers.BooleanField(source='criterion_verdict')
    oracle_dim = serializers.IntegerField(source='oracle_algebra_dim')
    oracle = serializers.BooleanField(source='oracle_verdict')
    witness_dim = serializers.SerializerMethodField()
    witness_basis = serializers.SerializerMethodField()

    def get_witness_dim(self, instance):
        return instance.witness.dim if instance.witness is not None else None

    def get_witness_basis(self, instance):
        if instance.witness is None:
            return None
        return MatrixSerializer(instance.witness.basis).data


class TdReportSerializer(serializers.Serializer):
    axiom_semisimple = serializers.ListField(child=serializers.BooleanField())
    axiom_tridiag_A = serializers.BooleanField()
    axiom_tridiag_Astar = serializers.BooleanField()
    axiom_irreducible = serializers.BooleanField()
    ordering_A = serializers.ListField(child=ScalarField())
    ordering_Astar = serializers.ListField(child=ScalarField())
    diameters = serializers.ListField(child=serializers.IntegerField())
    equal_diameters = serializers.BooleanField()
    shape = serializers.ListField(child=serializers.IntegerField(), allow_null=True)
    is_leonard = serializers.BooleanField()
    q_geometric = serializers.BooleanField(allow_null=True)


class AnalysisReportSerializer(serializers.Serializer):
    spec = ModuleSpecSerializer()
    dim = serializers.IntegerField()
    type = serializers.ListField(child=serializers.IntegerField())
    diameter = serializers.IntegerField()
    weight_dims = serializers.ListField(child=serializers.IntegerField())
    weight_poly_ok = serializers.BooleanField()
    drinfeld = serializers.SerializerMethodField()
    drinfeld_consistent = serializers.BooleanField()
    uq_irreducible = serializers.BooleanField()
    chevalley_ok = serializers.BooleanField()
    qserre_ok = serializers.BooleanField()
    aq_verdict = VerdictSerializer(allow_null=True)
    aq_skipped_reason = serializers.CharField(allow_null=True)
    eep_ok = serializers.BooleanField(allow_null=True)
    equitable_ok = serializers.BooleanField(allow_null=True)
    tdpair = TdReportSerializer(allow_null=True)
    shape = serializers.ListField(child=serializers.IntegerField(), allow_null=True)
    factorization = serializers.ListField(child=serializers.IntegerField(), allow_null=True)

    def get_drinfeld(self, instance):
        context = {'uq_irreducible': instance.uq_irreducible}
        return DrinfeldDataSerializer(instance.drinfeld, context=context).data

    def to_representation(self, instance):
        data = super().to_representation(instance)
        if instance.timing_ms is not None:
            data['timing_ms'] = instance.timing_ms
        return data


class ScanRowSerializer(serializers.BaseSerializer):
    def to_representation(self, instance):
        data = dict(instance)
        if 'criterion_value' in data:
            data['criterion_value'] = format_scalar(data['criterion_value'])
        return data


class WordCountSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    irreducible = serializers.IntegerField()
    total = serializers.IntegerField()
    equivalence = serializers.BooleanField()


class WordLengthQuery(serializers.Serializer):
    max_len = serializers.IntegerField(min_value=0)

    def validate_max_len(self, value):
        if value > settings.SERRE_WORD_CAP:
            raise serializers.ValidationError(f'max_len may not exceed {settings.SERRE_WORD_CAP}')
        return value
