import json

from django.db import models


class LogEntry(models.Model):
    LEVEL_CHOICES = (
        ('INFO', 'Info'),
        ('WARNING', 'Warning'),
        ('ERROR', 'Error'),
        ('DEBUG', 'Debug'),
    )

    timestamp = models.DateTimeField(auto_now_add=True)
    level = models.CharField(max_length=10, choices=LEVEL_CHOICES)
    message = models.TextField()
    module = models.CharField(max_length=100)
    suite = models.CharField(max_length=50, blank=True)

    class Meta:
        ordering = ['-timestamp']
        verbose_name_plural = 'Log entries'

    def __str__(self):
        return f"{self.timestamp} - {self.level} - {self.message[:100]}"


class RunReport(models.Model):
    STATUS_CHOICES = (
        ('passed', 'Passed'),
        ('failed', 'Failed'),
        ('error', 'Error'),
    )

    suite = models.CharField(max_length=50)
    status = models.CharField(max_length=10, choices=STATUS_CHOICES)
    instance_count = models.PositiveIntegerField(default=0)
    passed = models.PositiveIntegerField(default=0)
    failed = models.PositiveIntegerField(default=0)
    counterexample = models.TextField(blank=True)  # JSON
    seed = models.BigIntegerField(null=True, blank=True)
    parameters = models.TextField(blank=True)  # JSON
    wall_time = models.FloatField(default=0.0)
    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        ordering = ['-created_at']

    def __str__(self):
        return f"{self.suite} - {self.status} ({self.passed}/{self.instance_count})"

    @property
    def counterexample_data(self):
        return json.loads(self.counterexample) if self.counterexample else None

    @property
    def parameters_data(self):
        return json.loads(self.parameters) if self.parameters else {}
