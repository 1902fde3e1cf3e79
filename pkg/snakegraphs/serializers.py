from django.conf import settings
from rest_framework import serializers

from .exceptions import SnakeCalculusError
from .graph import from_dict
from .overlap import LABELED, SHAPE


def max_tiles():
    return getattr(settings, 'SNAKECALC', {}).get('MAX_TILES', 20)


class GraphSerializer(serializers.Serializer):
    steps = serializers.CharField(required=False, allow_blank=True, default='')
    tile_labels = serializers.ListField(child=serializers.CharField(), required=False)
    edge_labels = serializers.DictField(child=serializers.CharField(), required=False)
    orientation = serializers.ChoiceField(choices=(-1, 1), default=-1)
    edge = serializers.CharField(required=False)

    def validate(self, attrs):
        if len(attrs.get('steps', '')) + 1 > max_tiles():
            raise serializers.ValidationError({"steps": f"Graphs are limited to {max_tiles()} tiles"})
        try:
            attrs['graph'] = from_dict(attrs)
        except SnakeCalculusError as e:
            raise serializers.ValidationError({"graph": str(e)})
        return attrs


class RenderSerializer(serializers.Serializer):
    graph = GraphSerializer()
    format = serializers.ChoiceField(choices=('ascii', 'svg'), default='ascii')
    legend = serializers.BooleanField(default=False)


class GraphPairSerializer(serializers.Serializer):
    g1 = GraphSerializer()
    g2 = GraphSerializer()
    mode = serializers.ChoiceField(choices=(SHAPE, LABELED), default=SHAPE)

    def validate(self, attrs):
        if attrs['g1']['graph'].d == 0 or attrs['g2']['graph'].d == 0:
            raise serializers.ValidationError({"graph": "Overlaps need graphs with at least one tile"})
        return attrs
