import logging
import math

from scipy import constants

from .configfile import ConfigFileReader
from .constants import REFERENCE, OLSHANII_CONSTANT
from .exceptions import ConfinementResonanceException, InvalidParamsException
from .forms import MixtureParamsForm
from .models import MixtureParams, RamanDrive

logger = logging.getLogger(__name__)

RESONANCE_TOLERANCE = 1e-12


class ParamsManager(object):
    @classmethod
    def reference_params(cls):
        '''
        87Rb hyperfine mixture with 41K impurities in a 532 nm lattice
        :rtype: MixtureParams
        '''
        return MixtureParams(**REFERENCE)

    @classmethod
    def g1d_from_3d(cls, a3d, mass, omega_perp):
        '''
        Confinement renormalised 1D coupling of a 3D scattering length
        :param a3d: scattering length (m)
        :param mass: mass entering the transverse oscillator length (kg)
        :param omega_perp: transverse trap angular frequency (rad/s)
        :return: 1D coupling (J*m)
        '''
        if mass <= 0 or omega_perp <= 0:
            raise InvalidParamsException("mass and omega_perp must be strictly positive.")
        a_perp = math.sqrt(constants.hbar / (mass * omega_perp))
        denominator = 1.0 - OLSHANII_CONSTANT * a3d / a_perp
        if abs(denominator) < RESONANCE_TOLERANCE:
            raise ConfinementResonanceException("a3d = " + repr(a3d) + " m sits on the confinement induced "
                                                "resonance (a_perp = " + repr(a_perp) + " m).")
        return 2.0 * constants.hbar ** 2 * a3d / (mass * a_perp ** 2) / denominator

    @classmethod
    def raman_from_two_photon(cls, omega1, omega2, detuning):
        return RamanDrive.by_two_photon(omega1, omega2, detuning)

    @classmethod
    def load_config(cls, path):
        '''
        Reads, validates and converts a configuration file
        :return: (MixtureParams, RamanDrive)
        :raises ConfigException: with the offending line number
        '''
        reader = ConfigFileReader.by_path(path, MixtureParamsForm.accepted_keys())
        return cls._validate(reader)

    @classmethod
    def load_text(cls, text, source='<config>'):
        reader = ConfigFileReader.by_text(text, MixtureParamsForm.accepted_keys(), source=source)
        return cls._validate(reader)

    @classmethod
    def _validate(cls, reader):
        form = MixtureParamsForm(data=reader.entries)
        if not form.is_valid():
            raise InvalidParamsException(form.error_msg(reader))
        logger.debug("Loaded %d parameter(s) from %s", len(reader.entries), reader.source)
        return form.params, form.drive
