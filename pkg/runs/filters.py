import django_filters

from .models import RunReport


class RunReportFilter(django_filters.FilterSet):
    suite = django_filters.CharFilter(lookup_expr='icontains')
    status = django_filters.ChoiceFilter(choices=RunReport.STATUS_CHOICES)
    created_after = django_filters.DateTimeFilter(field_name='created_at', lookup_expr='gte')
    created_before = django_filters.DateTimeFilter(field_name='created_at', lookup_expr='lte')
    min_instances = django_filters.NumberFilter(method='filter_min_instances')

    class Meta:
        model = RunReport
        fields = ['suite', 'status']

    def filter_min_instances(self, queryset, name, value):
        return queryset.filter(instance_count__gte=value)
