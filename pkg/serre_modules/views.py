import logging

from django.http import JsonResponse
from rest_framework import status, viewsets
from rest_framework.decorators import action
from rest_framework.response import Response

from .exceptions import SerreError
from .pipeline import analyze, exit_code_for, relation_reports, word_counts
from .serializers import (
    AnalysisReportSerializer,
    ModuleSpecSerializer,
    RelationReportSerializer,
    WordCountSerializer,
    WordLengthQuery,
)

logger = logging.getLogger(__name__)

# exit code of the command line surface -> HTTP status
_STATUS_FOR_EXIT = {
    2: status.HTTP_400_BAD_REQUEST,
    3: status.HTTP_422_UNPROCESSABLE_ENTITY,
    4: status.HTTP_500_INTERNAL_SERVER_ERROR,
}


def welcome(request):
    return JsonResponse({"message": "q-Serre module analysis service"})


def health_check(request):
    return JsonResponse({"status": "ok"})


def _error_response(exc):
    code = exit_code_for(exc)
    if code == 4:
        logger.error('internal consistency failure: %s', exc)
    return Response({'error': str(exc)}, status=_STATUS_FOR_EXIT[code])


class ModuleViewSet(viewsets.ViewSet):
    serializer_class = ModuleSpecSerializer

    def _module_spec(self, request):
        serializer = self.serializer_class(data=request.data)
        serializer.is_valid(raise_exception=True)
        return serializer.save()

    @action(detail=False, methods=['post'])
    def analyze(self, request):
        """Full analysis of a tensor product of evaluation modules"""
        module_spec = self._module_spec(request)
        try:
            report = analyze(module_spec, strict=request.query_params.get('strict') == 'true')
        except SerreError as exc:
            return _error_response(exc)
        return Response(AnalysisReportSerializer(report).data)

    @action(detail=False, methods=['post'])
    def relations(self, request):
        module_spec = self._module_spec(request)
        try:
            reports = relation_reports(module_spec)
        except SerreError as exc:
            return _error_response(exc)
        return Response({name: RelationReportSerializer(r).data for name, r in reports.items()})


class WordViewSet(viewsets.ViewSet):
    def list(self, request):
        """Irreducible word counts for lengths 0..max_len"""
        query = WordLengthQuery(data=request.query_params)
        if not query.is_valid():
            return Response(query.errors, status=status.HTTP_400_BAD_REQUEST)
        rows = word_counts(query.validated_data['max_len'])
        return Response(WordCountSerializer(rows, many=True).data)
