import logging

from rest_framework import status
from rest_framework.decorators import api_view
from rest_framework.response import Response

from .exceptions import SnakeCalculusError
from .graph import to_dict
from .overlap import crosses, find_overlaps
from .render import render
from .serializers import GraphPairSerializer, GraphSerializer, RenderSerializer

logger = logging.getLogger(__name__)


@api_view(['POST'])
def build_graph(request):
    try:
        serializer = GraphSerializer(data=request.data)
        if serializer.is_valid():
            G = serializer.validated_data['graph']
            data = to_dict(G)
            if G.d:
                data.update({
                    'd': G.d,
                    'edges': [str(e) for e in G.edges],
                    'interior_edges': [str(e) for e in G.interior_edges],
                    'auto_labeled': G.auto_labeled,
                })
            return Response(data)
        return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)
    except Exception as e:
        logger.error(f"Build graph error: {str(e)}")
        return Response({'error': 'Failed to build snake graph'}, status=status.HTTP_500_INTERNAL_SERVER_ERROR)


@api_view(['POST'])
def render_graph(request):
    try:
        serializer = RenderSerializer(data=request.data)
        if serializer.is_valid():
            G = serializer.validated_data['graph']['graph']
            fmt = serializer.validated_data['format']
            return Response({
                'format': fmt,
                'drawing': render(G, fmt, serializer.validated_data['legend']),
            })
        return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)
    except SnakeCalculusError as e:
        return Response({'error': str(e)}, status=status.HTTP_400_BAD_REQUEST)
    except Exception as e:
        logger.error(f"Render graph error: {str(e)}")
        return Response({'error': 'Failed to render snake graph'}, status=status.HTTP_500_INTERNAL_SERVER_ERROR)


@api_view(['POST'])
def overlap_list(request):
    try:
        serializer = GraphPairSerializer(data=request.data)
        if serializer.is_valid():
            G1 = serializer.validated_data['g1']['graph']
            G2 = serializer.validated_data['g2']['graph']
            overlaps = find_overlaps(G1, G2, serializer.validated_data['mode'])
            return Response({
                'count': len(overlaps),
                'overlaps': [{'overlap': str(ov), 'crossing': crosses(G1, G2, ov)} for ov in overlaps],
            })
        return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)
    except SnakeCalculusError as e:
        return Response({'error': str(e)}, status=status.HTTP_400_BAD_REQUEST)
    except Exception as e:
        logger.error(f"Overlap list error: {str(e)}")
        return Response({'error': 'Failed to find overlaps'}, status=status.HTTP_500_INTERNAL_SERVER_ERROR)
