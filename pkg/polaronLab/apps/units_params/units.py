import re

from scipy import constants

from .exceptions import UnitException

LENGTH = 'length'
INVERSE_LENGTH = 'inverse length'
COUPLING = 'coupling'
MASS = 'mass'
ANGULAR_FREQUENCY = 'angular frequency'

TWO_PI = 2 * constants.pi

UNITS = {
    LENGTH: {'m': 1.0, 'mm': 1e-3, 'um': 1e-6, 'nm': 1e-9},
    INVERSE_LENGTH: {'1/m': 1.0, 'm^-1': 1.0, '1/um': 1e6, 'um^-1': 1e6, '1/nm': 1e9, 'nm^-1': 1e9},
    COUPLING: {'J*m': 1.0, 'J m': 1.0, 'Jm': 1.0},
    MASS: {'kg': 1.0, 'u': constants.atomic_mass},
    ANGULAR_FREQUENCY: {'rad/s': 1.0, 'Hz': TWO_PI, 'kHz': TWO_PI * 1e3, 'MHz': TWO_PI * 1e6},
}

QUANTITY_PATTERN = re.compile(r'^\s*([-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)\s*(.*?)\s*$')


class Quantity(object):
    '''Parses "value unit" strings into SI floats. Hz units carry the 2*pi factor.'''

    @classmethod
    def parse(cls, text, dimension):
        match = QUANTITY_PATTERN.match(str(text))
        if match is None:
            raise UnitException("'" + str(text) + "' is not a number with an optional unit.")
        number, unit = match.group(1), match.group(2)
        return float(number) * cls.factor(unit, dimension)

    @classmethod
    def factor(cls, unit, dimension):
        if unit == '':
            return 1.0
        table = UNITS[dimension]
        if unit not in table:
            raise UnitException("Unit '" + unit + "' is not a " + dimension + " unit. Accepted: " +
                                ", ".join(sorted(table)) + ".")
        return table[unit]

    @classmethod
    def format_frequency(cls, omega):
        '''
        :param omega: angular frequency in rad/s
        :return: text with both rad/s and Hz
        '''
        return repr(float(omega)) + " rad/s (" + repr(float(omega) / TWO_PI) + " Hz)"
