from polaronLab.apps.exceptions import ConfigException


class InvalidDensityException(ConfigException):
    '''Raise when an impurity density has negative occupations or a bad width'''
