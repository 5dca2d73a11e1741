from polaronLab.apps.exceptions import ConfigException, PhysicsException


class InvalidParamsException(ConfigException):
    '''Raise when a physical parameter violates its invariant'''


class ConfigSyntaxException(ConfigException):
    '''Raise when a config line can't be parsed'''


class UnknownKeyException(ConfigSyntaxException):
    '''Raise when a config file names a key that is not a parameter'''


class UnitException(ConfigException):
    '''Raise when a quantity carries a unit of the wrong dimension'''


class ZeroDetuningException(ConfigException):
    '''Raise when a two photon drive has zero detuning'''


class NegativeCouplingException(ConfigException):
    '''Raise when a two photon drive reduces to a negative Raman coupling'''


class ConfinementResonanceException(PhysicsException):
    '''Raise when the scattering length hits the confinement induced resonance'''
