import math
from collections import namedtuple

from ..exceptions import InvalidParamsException, ZeroDetuningException, NegativeCouplingException


class RamanDrive(namedtuple('RamanDrive', ['omega_rabi'])):
    '''Effective two photon Raman coupling, angular frequency'''
    __slots__ = ()

    def __new__(cls, omega_rabi=0.0):
        omega_rabi = float(omega_rabi)
        if not math.isfinite(omega_rabi) or omega_rabi < 0:
            raise InvalidParamsException("omega_rabi must be finite and >= 0, got " + repr(omega_rabi) + ".")
        return super(RamanDrive, cls).__new__(cls, omega_rabi)

    @classmethod
    def off(cls):
        return cls(0.0)

    @classmethod
    def by_two_photon(cls, omega1, omega2, detuning):
        '''
        Reduces the Rabi frequencies of the two beams and their common detuning
        :return: RamanDrive with omega_rabi = 4*omega1*omega2/detuning
        '''
        omega1, omega2, detuning = float(omega1), float(omega2), float(detuning)
        if omega1 < 0 or omega2 < 0:
            raise NegativeCouplingException("Rabi frequencies must be >= 0.")
        if detuning == 0:
            raise ZeroDetuningException("The detuning of a two photon drive can't be zero.")
        omega_rabi = 4.0 * omega1 * omega2 / detuning
        if omega_rabi < 0:
            raise NegativeCouplingException("Detuning " + repr(detuning) +
                                            " gives a negative Raman coupling.")
        return cls(omega_rabi + 0.0)

    @property
    def is_on(self):
        return self.omega_rabi > 0
