import logging

from rest_framework import status
from rest_framework.decorators import api_view
from rest_framework.response import Response

from resolutions.construction import describe
from snakegraphs.exceptions import SnakeCalculusError
from snakegraphs.graph import to_dict
from snakegraphs.render import render

from .oracle import flip_path, oracle_cluster_variable
from .polygon import (
    arcs_cross,
    cluster_variable,
    crossing_sequence,
    f_polynomial,
    fans,
    resolve_crossing,
    smooth,
    snake_graph,
)
from .serializers import ArcRequestSerializer, SmoothRequestSerializer

logger = logging.getLogger(__name__)


@api_view(['POST'])
def arc_snake_graph(request):
    try:
        serializer = ArcRequestSerializer(data=request.data)
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)

        T, gamma = serializer.validated_data['triangulation'], serializer.validated_data['gamma']
        G = snake_graph(T, gamma)
        data = {'arc': str(gamma), 'graph': to_dict(G), 'drawing': render(G)}
        if G.d:
            data['crossed'] = [list(d) for d in crossing_sequence(T, gamma)]
            data['fans'] = [{'vertex': f.vertex, 'start': f.start, 'end': f.end} for f in fans(T, gamma)]
        return Response(data)
    except SnakeCalculusError as e:
        return Response({'error': str(e)}, status=status.HTTP_400_BAD_REQUEST)
    except Exception as e:
        logger.error(f"Arc snake graph error: {str(e)}")
        return Response({'error': 'Failed to build snake graph of arc'},
                        status=status.HTTP_500_INTERNAL_SERVER_ERROR)


@api_view(['POST'])
def arc_cluster_variable(request):
    try:
        serializer = ArcRequestSerializer(data=request.data)
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)

        T, gamma = serializer.validated_data['triangulation'], serializer.validated_data['gamma']
        return Response({
            'arc': str(gamma),
            'x': str(cluster_variable(T, gamma)),
            'f': str(f_polynomial(T, gamma)),
        })
    except SnakeCalculusError as e:
        return Response({'error': str(e)}, status=status.HTTP_400_BAD_REQUEST)
    except Exception as e:
        logger.error(f"Cluster variable error: {str(e)}")
        return Response({'error': 'Failed to compute cluster variable'},
                        status=status.HTTP_500_INTERNAL_SERVER_ERROR)


@api_view(['POST'])
def smooth_arcs(request):
    try:
        serializer = SmoothRequestSerializer(data=request.data)
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)

        gamma1, gamma2 = serializer.validated_data['gamma1'], serializer.validated_data['gamma2']
        if not arcs_cross(gamma1, gamma2):
            return Response({'error': f'{gamma1} and {gamma2} do not cross'}, status=status.HTTP_400_BAD_REQUEST)
        if 'triangulation' in serializer.validated_data:
            crossing = resolve_crossing(serializer.validated_data['triangulation'], gamma1, gamma2)
            return Response({
                'pair34': [str(a) for a in crossing.arcs34],
                'pair56': [str(a) for a in crossing.arcs56],
                'construction': describe(crossing.construction),
            })
        pair34, pair56 = smooth(gamma1, gamma2, serializer.validated_data['n'])
        return Response({'pair34': [str(a) for a in pair34], 'pair56': [str(a) for a in pair56]})
    except SnakeCalculusError as e:
        return Response({'error': str(e)}, status=status.HTTP_400_BAD_REQUEST)
    except Exception as e:
        logger.error(f"Smoothing error: {str(e)}")
        return Response({'error': 'Failed to smooth arcs'}, status=status.HTTP_500_INTERNAL_SERVER_ERROR)


@api_view(['POST'])
def oracle(request):
    try:
        serializer = ArcRequestSerializer(data=request.data)
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)

        T, gamma = serializer.validated_data['triangulation'], serializer.validated_data['gamma']
        path = flip_path(T, gamma) if gamma not in T and not T.polygon.is_boundary(*gamma.key) else []
        value = oracle_cluster_variable(T, gamma, path)
        return Response({
            'arc': str(gamma),
            'flips': [list(d) for d in path],
            'x': str(value),
            'agrees': value == cluster_variable(T, gamma),
        })
    except SnakeCalculusError as e:
        return Response({'error': str(e)}, status=status.HTTP_400_BAD_REQUEST)
    except Exception as e:
        logger.error(f"Oracle error: {str(e)}")
        return Response({'error': 'Failed to mutate to the cluster variable'},
                        status=status.HTTP_500_INTERNAL_SERVER_ERROR)
