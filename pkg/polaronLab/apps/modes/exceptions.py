from polaronLab.apps.exceptions import PhysicsException


class ModesException(PhysicsException):
    '''Modes Base Exception'''


class DynamicalInstabilityException(ModesException):
    '''Raise when the coupling matrix has an eigenvalue <= 0'''


class ZeroInterComponentCouplingException(ModesException):
    '''Raise when the Raman threshold is asked for g_AB = 0'''


class UnequalDensitiesException(ModesException):
    '''Raise when a closed form is asked for n0_A != n0_B'''
