from django.urls import path

from . import views

urlpatterns = [
    path('polynomial/', views.polynomial, name='laurent-polynomial'),  # /api/laurent/polynomial/
    path('check-identity/', views.check_identity, name='laurent-check-identity'),  # /api/laurent/check-identity/
]
