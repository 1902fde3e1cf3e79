from rest_framework import serializers

from snakegraphs.exceptions import SnakeCalculusError
from snakegraphs.overlap import Overlap
from snakegraphs.serializers import GraphSerializer

from .construction import PRINTED, PROOF, graft, resolve


class ConstructionSerializer(serializers.Serializer):
    """Two graphs and either an overlap (resolution) or a graft site."""
    g1 = GraphSerializer()
    g2 = GraphSerializer()
    overlap = serializers.CharField(required=False, help_text='s,t,s_prime,t_prime')
    s = serializers.IntegerField(required=False, min_value=0)
    edge = serializers.ChoiceField(choices=('north', 'east', 'N', 'E'), required=False)
    convention = serializers.ChoiceField(choices=(PRINTED, PROOF), required=False)

    # 'resolution', 'graft' or None for either
    kind = None

    def validate(self, attrs):
        has_overlap, has_site = 'overlap' in attrs, 's' in attrs
        if has_overlap == has_site:
            raise serializers.ValidationError({"overlap": "Give exactly one of overlap and s"})
        if self.kind == 'resolution' and not has_overlap:
            raise serializers.ValidationError({"overlap": "A resolution needs an overlap"})
        if self.kind == 'graft' and not has_site:
            raise serializers.ValidationError({"s": "A grafting needs a graft site"})

        G1, G2 = attrs['g1']['graph'], attrs['g2']['graph']
        if G1.d == 0 or G2.d == 0:
            raise serializers.ValidationError({"graph": "Both graphs need at least one tile"})
        try:
            if has_overlap:
                attrs['construction'] = resolve(G1, G2, Overlap.parse(attrs['overlap']), attrs.get('convention'))
            else:
                attrs['construction'] = graft(G1, G2, attrs['s'], attrs.get('edge'))
        except SnakeCalculusError as e:
            raise serializers.ValidationError({"construction": f"{type(e).__name__}: {e}"})
        return attrs


class ResolutionSerializer(ConstructionSerializer):
    kind = 'resolution'


class GraftingSerializer(ConstructionSerializer):
    kind = 'graft'
