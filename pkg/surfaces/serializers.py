from django.conf import settings
from rest_framework import serializers

from snakegraphs.exceptions import SnakeCalculusError

from .polygon import MIN_VERTICES, Arc, Triangulation


def max_polygon():
    return getattr(settings, 'SNAKECALC', {}).get('MAX_POLYGON', 10)


class TriangulationSerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=MIN_VERTICES)
    tri = serializers.CharField(help_text="Diagonals, e.g. '1-3,1-4'")

    def validate(self, attrs):
        if attrs['n'] > max_polygon():
            raise serializers.ValidationError({"n": f"Polygons are limited to {max_polygon()} vertices"})
        try:
            attrs['triangulation'] = Triangulation.parse(attrs['n'], attrs['tri'])
        except SnakeCalculusError as e:
            raise serializers.ValidationError({"tri": str(e)})
        return attrs


class ArcRequestSerializer(TriangulationSerializer):
    arc = serializers.CharField(help_text="Endpoints, e.g. '2,4'")

    def validate(self, attrs):
        attrs = super().validate(attrs)
        try:
            gamma = Arc.parse(attrs['arc'])
            attrs['gamma'] = attrs['triangulation'].polygon.arc(gamma.a, gamma.b)
        except SnakeCalculusError as e:
            raise serializers.ValidationError({"arc": str(e)})
        return attrs


class SmoothRequestSerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=MIN_VERTICES)
    arc = serializers.CharField()
    arc2 = serializers.CharField()
    tri = serializers.CharField(required=False, help_text='Also resolve the snake graphs in this triangulation')

    def validate(self, attrs):
        if attrs['n'] > max_polygon():
            raise serializers.ValidationError({"n": f"Polygons are limited to {max_polygon()} vertices"})
        try:
            attrs['gamma1'], attrs['gamma2'] = Arc.parse(attrs['arc']), Arc.parse(attrs['arc2'])
            if 'tri' in attrs:
                attrs['triangulation'] = Triangulation.parse(attrs['n'], attrs['tri'])
        except SnakeCalculusError as e:
            raise serializers.ValidationError({"arc": str(e)})
        return attrs
