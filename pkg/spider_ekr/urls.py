"""Spider-EKR URL Configuration

Every route is a read-only GET computing its answer from the query string.
For more information please see:
    https://docs.djangoproject.com/en/4.2/topics/http/urls/
"""
from django.urls import path

from . import views

urlpatterns = [
    path('stars', views.Stars.as_view(), name='stars'),
    path('order', views.Order.as_view(), name='order'),
    path('ekr', views.Ekr.as_view(), name='ekr'),
    path('verify', views.Verify.as_view(), name='verify'),
    path('centers', views.Centers.as_view(), name='centers'),
]
