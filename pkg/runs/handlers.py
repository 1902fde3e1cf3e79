import logging

from django.db import connection


class DatabaseLogHandler(logging.Handler):
    def emit(self, record):
        try:
            # Database not ready (e.g. during migrate or before the first query)
            if connection.connection is None:
                return

            from .models import LogEntry

            LogEntry.objects.create(
                level=record.levelname,
                message=self.format(record),
                module=record.module,
                suite=getattr(record, 'suite', ''),
            )
        except Exception as e:
            # Fallback to console logging if database logging fails
            print(f"Database logging failed: {e}")
