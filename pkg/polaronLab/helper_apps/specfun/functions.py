'''
Error function family used by every closed form of the package.

Products of the form exp(a) * erfc(b) are never formed directly. They are
evaluated as exp(a - b^2) * erfcx(b) for b >= 0, where a - b^2 controls the
magnitude, and as exp(a) * erfc(b) for b < 0, where erfc(b) lies in (1, 2).
'''
from collections import namedtuple

import numpy as np
from scipy import special

from .exception import ExpErfcOverflowException

OVERFLOW_EXPONENT = 700.0


def _as_result(value):
    if np.ndim(value) == 0:
        return float(value)
    return value


def erf(x):
    return _as_result(special.erf(x))


def erfc(x):
    return _as_result(special.erfc(x))


def erfcx(x):
    '''
    Scaled complementary error function exp(x^2) * erfc(x)
    :param x: real scalar or array
    :return: float or numpy array
    '''
    return _as_result(special.erfcx(x))


def exp_erfc(a, b):
    '''
    Stable exp(a) * erfc(b)
    :param a: exponent, scalar or array
    :param b: erfc argument, scalar or array broadcastable with a
    :return: float or numpy array
    :raises ExpErfcOverflowException: when the product exceeds exp(700)
    '''
    a, b = np.broadcast_arrays(np.asarray(a, dtype=float), np.asarray(b, dtype=float))
    positive = b >= 0
    exponent = np.where(positive, a - b * b, a)
    if np.any(exponent > OVERFLOW_EXPONENT):
        worst = float(np.max(exponent))
        raise ExpErfcOverflowException("exp(a)*erfc(b) overflows, controlling exponent is " + repr(worst))
    with np.errstate(all='ignore'):
        scaled = np.exp(a - b * b) * special.erfcx(b)
        direct = np.exp(a) * special.erfc(b)
    return _as_result(np.where(positive, scaled, direct))


class StableErfcProduct(namedtuple('StableErfcProduct', ['log_prefactor', 'erfc_arg', 'value'])):
    '''exp(log_prefactor) * erfc(erfc_arg) together with its arguments'''
    __slots__ = ()

    @classmethod
    def by_arguments(cls, a, b):
        return cls(float(a), float(b), exp_erfc(float(a), float(b)))

    @property
    def controlling_exponent(self):
        if self.erfc_arg >= 0:
            return self.log_prefactor - self.erfc_arg ** 2
        return self.log_prefactor
