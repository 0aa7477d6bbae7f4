from rest_framework.routers import DefaultRouter

from serre_modules.views import ModuleViewSet, WordViewSet

router = DefaultRouter()
router.register(r'modules', ModuleViewSet, basename='module')
router.register(r'words', WordViewSet, basename='word')

urlpatterns = router.urls
