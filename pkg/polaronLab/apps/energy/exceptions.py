from polaronLab.apps.exceptions import ConfigException, PhysicsException


class EnergyException(PhysicsException):
    '''Energy Base Exception'''


class NoSignChangeException(EnergyException):
    '''Raise when the pair force keeps one sign over the whole drive bracket'''


class InvalidDistanceException(ConfigException):
    '''Raise when a separation is negative or outside the probe range'''
