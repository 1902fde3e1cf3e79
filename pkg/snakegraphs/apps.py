from django.apps import AppConfig


class SnakegraphsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'snakegraphs'
    verbose_name = 'Snake graphs'
