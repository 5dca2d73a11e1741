from django.apps import AppConfig


class SpecfunConfig(AppConfig):
    name = 'polaronLab.helper_apps.specfun'
