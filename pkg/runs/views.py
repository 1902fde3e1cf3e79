import logging

from rest_framework import status
from rest_framework.decorators import api_view
from rest_framework.response import Response

from .filters import RunReportFilter
from .models import RunReport
from .serializers import RunReportDetailSerializer, RunReportListSerializer

logger = logging.getLogger(__name__)


@api_view(['GET'])
def run_list(request):
    try:
        run_filter = RunReportFilter(request.GET, queryset=RunReport.objects.all())
        reports = run_filter.qs
        return Response({
            'count': reports.count(),
            'runs': RunReportListSerializer(reports, many=True).data,
        })
    except Exception as e:
        logger.error(f"Run list error: {str(e)}")
        return Response({'error': 'Failed to fetch runs'}, status=status.HTTP_500_INTERNAL_SERVER_ERROR)


@api_view(['GET'])
def run_detail(request, run_id):
    try:
        report = RunReport.objects.get(id=run_id)
        return Response(RunReportDetailSerializer(report).data)
    except RunReport.DoesNotExist:
        return Response({'error': 'Run not found'}, status=status.HTTP_404_NOT_FOUND)
    except Exception as e:
        logger.error(f"Run detail error: {str(e)}")
        return Response({'error': 'Failed to fetch run details'}, status=status.HTTP_500_INTERNAL_SERVER_ERROR)
