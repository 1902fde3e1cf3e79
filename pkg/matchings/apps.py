from django.apps import AppConfig


class MatchingsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'matchings'
    verbose_name = 'Perfect matchings'
