from rest_framework import serializers

from resolutions.serializers import ConstructionSerializer
from snakegraphs.exceptions import SnakeCalculusError
from snakegraphs.serializers import GraphSerializer
from surfaces.polygon import Arc, resolve_crossing
from surfaces.serializers import TriangulationSerializer


class PolynomialRequestSerializer(serializers.Serializer):
    graphs = serializers.ListField(child=GraphSerializer(), min_length=1)
    allow_generated = serializers.BooleanField(default=False)
    specialize = serializers.ListField(child=serializers.CharField(), required=False,
                                       help_text='Variables set to 1')


class GraphIdentitySerializer(ConstructionSerializer):
    allow_generated = serializers.BooleanField(default=False)


class ArcIdentitySerializer(TriangulationSerializer):
    arcs = serializers.ListField(child=serializers.CharField(), min_length=2, max_length=2)

    def validate(self, attrs):
        attrs = super().validate(attrs)
        try:
            gamma1, gamma2 = (Arc.parse(arc) for arc in attrs['arcs'])
            attrs['construction'] = resolve_crossing(attrs['triangulation'], gamma1, gamma2).construction
        except SnakeCalculusError as e:
            raise serializers.ValidationError({"arcs": f"{type(e).__name__}: {e}"})
        attrs['allow_generated'] = False
        attrs['unit_labels'] = attrs['triangulation'].polygon.boundary_labels
        return attrs
