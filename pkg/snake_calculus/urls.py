"""
URL configuration for snake_calculus project.

Every app exposes JSON endpoints under /api/<app>/. The command line
equivalent of each endpoint is ``python manage.py snakecalc <subcommand>``.
"""
from django.contrib import admin
from django.urls import path, include

urlpatterns = [
    path('admin/', admin.site.urls),
    path('api/snakegraphs/', include('snakegraphs.urls')),
    path('api/matchings/', include('matchings.urls')),
    path('api/resolutions/', include('resolutions.urls')),
    path('api/laurent/', include('laurent.urls')),
    path('api/surfaces/', include('surfaces.urls')),
    path('api/runs/', include('runs.urls')),
]
