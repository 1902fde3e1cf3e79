from django.urls import path

from . import views

urlpatterns = [
    path('', views.run_list, name='run-list'),  # /api/runs/
    path('<int:run_id>/', views.run_detail, name='run-detail'),  # /api/runs/{id}/
]
