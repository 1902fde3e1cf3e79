import logging

from rest_framework import status
from rest_framework.decorators import api_view
from rest_framework.response import Response

from snakegraphs.exceptions import SnakeCalculusError

from .perfect import boundary_matchings, count_matchings, enumerate_matchings, heights
from .serializers import MatchingRequestSerializer

logger = logging.getLogger(__name__)


@api_view(['POST'])
def matching_list(request):
    try:
        serializer = MatchingRequestSerializer(data=request.data)
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)

        G = serializer.validated_data['graph']['graph']
        if serializer.validated_data['count_only']:
            return Response({'count': count_matchings(G)})

        minus, plus = boundary_matchings(G)
        matchings = enumerate_matchings(G)
        return Response({
            'count': len(matchings),
            'minimal': [str(e) for e in minus],
            'maximal': [str(e) for e in plus],
            'matchings': [
                {'edges': [str(e) for e in P], 'heights': list(heights(G, P))}
                for P in matchings
            ],
        })
    except SnakeCalculusError as e:
        return Response({'error': str(e)}, status=status.HTTP_400_BAD_REQUEST)
    except Exception as e:
        logger.error(f"Matching list error: {str(e)}")
        return Response({'error': 'Failed to enumerate matchings'}, status=status.HTTP_500_INTERNAL_SERVER_ERROR)
