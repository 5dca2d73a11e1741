from django.apps import AppConfig


class AppsConfig(AppConfig):
    name = 'polaronLab.apps'
