from django.apps import AppConfig


class ProfilesConfig(AppConfig):
    name = 'polaronLab.apps.profiles'
