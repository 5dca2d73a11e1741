from django.apps import AppConfig


class OracleConfig(AppConfig):
    name = 'polaronLab.apps.oracle'
