from django.apps import AppConfig


class ModesConfig(AppConfig):
    name = 'polaronLab.apps.modes'
