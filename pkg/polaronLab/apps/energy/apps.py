from django.apps import AppConfig


class EnergyConfig(AppConfig):
    name = 'polaronLab.apps.energy'
