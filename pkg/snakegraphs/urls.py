from django.urls import path

from . import views

urlpatterns = [
    path('build/', views.build_graph, name='graph-build'),  # /api/snakegraphs/build/
    path('render/', views.render_graph, name='graph-render'),  # /api/snakegraphs/render/
    path('overlaps/', views.overlap_list, name='overlap-list'),  # /api/snakegraphs/overlaps/
]
