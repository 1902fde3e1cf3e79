import logging

from rest_framework import status
from rest_framework.decorators import api_view
from rest_framework.response import Response

from resolutions.construction import Grafting
from snakegraphs.exceptions import SnakeCalculusError

from .identities import L, check_graft_identity, check_resolution_identity
from .serializers import ArcIdentitySerializer, GraphIdentitySerializer, PolynomialRequestSerializer

logger = logging.getLogger(__name__)


@api_view(['POST'])
def polynomial(request):
    try:
        serializer = PolynomialRequestSerializer(data=request.data)
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)

        graphs = [item['graph'] for item in serializer.validated_data['graphs']]
        value = L(graphs, serializer.validated_data['allow_generated'])
        data = {'laurent': str(value), 'positive': value.has_positive_coefficients()}
        if 'specialize' in serializer.validated_data:
            data['specialized'] = str(value.specialize(serializer.validated_data['specialize']))
        return Response(data)
    except SnakeCalculusError as e:
        return Response({'error': str(e)}, status=status.HTTP_400_BAD_REQUEST)
    except Exception as e:
        logger.error(f"Laurent polynomial error: {str(e)}")
        return Response({'error': 'Failed to compute Laurent polynomial'},
                        status=status.HTTP_500_INTERNAL_SERVER_ERROR)


@api_view(['POST'])
def check_identity(request):
    try:
        serializer_class = ArcIdentitySerializer if 'n' in request.data else GraphIdentitySerializer
        serializer = serializer_class(data=request.data)
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)

        construction = serializer.validated_data['construction']
        options = {
            'allow_generated': serializer.validated_data['allow_generated'],
            'unit_labels': serializer.validated_data.get('unit_labels', frozenset()),
        }
        if isinstance(construction, Grafting):
            check = check_graft_identity(construction, **options)
        else:
            check = check_resolution_identity(construction, **options)
        return Response({'kind': 'graft' if isinstance(construction, Grafting) else 'resolution',
                         **check.as_dict()})
    except SnakeCalculusError as e:
        return Response({'error': str(e)}, status=status.HTTP_400_BAD_REQUEST)
    except Exception as e:
        logger.error(f"Identity check error: {str(e)}")
        return Response({'error': 'Failed to check identity'}, status=status.HTTP_500_INTERNAL_SERVER_ERROR)
