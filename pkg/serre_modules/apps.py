from django.apps import AppConfig


class SerreModulesConfig(AppConfig):
    name = 'serre_modules'
    verbose_name = 'q-Serre module analysis'
