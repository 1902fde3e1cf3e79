from rest_framework import serializers

from snakegraphs.serializers import GraphSerializer


class MatchingRequestSerializer(serializers.Serializer):
    graph = GraphSerializer()
    count_only = serializers.BooleanField(default=False)
