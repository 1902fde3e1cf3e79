from django.contrib import admin

from .models import LogEntry, RunReport


@admin.register(LogEntry)
class LogEntryAdmin(admin.ModelAdmin):
    list_display = ('timestamp', 'level', 'module', 'suite')
    list_filter = ('level', 'module', 'timestamp')
    search_fields = ('message',)
    readonly_fields = ('timestamp',)
    list_per_page = 50

    def has_add_permission(self, request):
        return False

    def has_change_permission(self, request, obj=None):
        return False


@admin.register(RunReport)
class RunReportAdmin(admin.ModelAdmin):
    list_display = ('created_at', 'suite', 'status', 'instance_count', 'passed', 'failed', 'wall_time')
    list_filter = ('suite', 'status', 'created_at')
    search_fields = ('suite', 'counterexample')
    readonly_fields = ('created_at',)
    list_per_page = 50

    def has_add_permission(self, request):
        return False  # Reports only come from suite runs

    def has_change_permission(self, request, obj=None):
        return False
