from django.urls import path, include
from serre_modules.views import health_check, welcome

urlpatterns = [
    path('health', health_check, name='health'),
    path('', welcome, name='welcome'),
    path('api/', include('serre_modules.urls')),
]
