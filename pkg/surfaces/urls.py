from django.urls import path

from . import views

urlpatterns = [
    path('snake/', views.arc_snake_graph, name='surface-snake'),  # /api/surfaces/snake/
    path('xvar/', views.arc_cluster_variable, name='surface-xvar'),  # /api/surfaces/xvar/
    path('smooth/', views.smooth_arcs, name='surface-smooth'),  # /api/surfaces/smooth/
    path('oracle/', views.oracle, name='surface-oracle'),  # /api/surfaces/oracle/
]
