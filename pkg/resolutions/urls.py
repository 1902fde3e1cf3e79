from django.urls import path

from . import views

urlpatterns = [
    path('resolve/', views.resolve_overlap, name='resolution-resolve'),  # /api/resolutions/resolve/
    path('graft/', views.graft_graphs, name='resolution-graft'),  # /api/resolutions/graft/
    path('verify/', views.verify, name='resolution-verify'),  # /api/resolutions/verify/
]
