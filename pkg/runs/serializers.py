from rest_framework import serializers

from .models import RunReport


class RunReportListSerializer(serializers.ModelSerializer):
    class Meta:
        model = RunReport
        fields = ('id', 'suite', 'status', 'instance_count', 'passed', 'failed', 'wall_time', 'created_at')


class RunReportDetailSerializer(serializers.ModelSerializer):
    counterexample = serializers.SerializerMethodField()
    parameters = serializers.SerializerMethodField()

    class Meta:
        model = RunReport
        fields = '__all__'

    def get_counterexample(self, obj):
        return obj.counterexample_data

    def get_parameters(self, obj):
        return obj.parameters_data
