from django.apps import AppConfig


class UnitsParamsConfig(AppConfig):
    name = 'polaronLab.apps.units_params'
