from polaronLab.apps.exceptions import ConfigException


class InvalidSweepException(ConfigException):
    '''Raise when a sweep grid or variable is malformed'''
