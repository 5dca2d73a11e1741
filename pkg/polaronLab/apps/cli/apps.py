from django.apps import AppConfig


class CliConfig(AppConfig):
    name = 'polaronLab.apps.cli'
