import logging

from rest_framework import status
from rest_framework.decorators import api_view
from rest_framework.response import Response

from snakegraphs.exceptions import SnakeCalculusError

from .bijection import verify_bijection
from .construction import describe
from .serializers import ConstructionSerializer, GraftingSerializer, ResolutionSerializer

logger = logging.getLogger(__name__)


def _construct(serializer_class, request, operation):
    try:
        serializer = serializer_class(data=request.data)
        if serializer.is_valid():
            return Response(describe(serializer.validated_data['construction']))
        return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)
    except SnakeCalculusError as e:
        return Response({'error': str(e)}, status=status.HTTP_400_BAD_REQUEST)
    except Exception as e:
        logger.error(f"{operation} error: {str(e)}")
        return Response({'error': f'Failed to compute {operation.lower()}'},
                        status=status.HTTP_500_INTERNAL_SERVER_ERROR)


@api_view(['POST'])
def resolve_overlap(request):
    return _construct(ResolutionSerializer, request, 'Resolution')


@api_view(['POST'])
def graft_graphs(request):
    return _construct(GraftingSerializer, request, 'Grafting')


@api_view(['POST'])
def verify(request):
    try:
        serializer = ConstructionSerializer(data=request.data)
        if serializer.is_valid():
            report = verify_bijection(serializer.validated_data['construction'])
            return Response(report.as_dict())
        return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)
    except SnakeCalculusError as e:
        return Response({'error': str(e)}, status=status.HTTP_400_BAD_REQUEST)
    except Exception as e:
        logger.error(f"Bijection check error: {str(e)}")
        return Response({'error': 'Failed to verify bijection'}, status=status.HTTP_500_INTERNAL_SERVER_ERROR)
