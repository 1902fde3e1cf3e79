from django.urls import path

from . import views

urlpatterns = [
    path('', views.matching_list, name='matching-list'),  # /api/matchings/
]
