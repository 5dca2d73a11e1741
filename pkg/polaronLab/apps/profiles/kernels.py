import numpy as np

from polaronLab.helper_apps.specfun.functions import exp_erfc


def f_kernel(sigma, eta, x):
    '''
    Green function exp(-eta|x|)/(2 eta) convolved with the unit gaussian
    (pi sigma^2)^-1/2 exp(-x^2/sigma^2)
    :param sigma: gaussian width parameter (m)
    :param eta: inverse decay length (1/m)
    :param x: position(s) (m)
    :return: value(s) in m
    '''
    x = np.asarray(x, dtype=float)
    shift = eta * eta * sigma * sigma / 4.0
    half = eta * sigma / 2.0
    value = (exp_erfc(shift + eta * x, half + x / sigma) +
             exp_erfc(shift - eta * x, half - x / sigma)) / (4.0 * eta)
    if np.ndim(value) == 0:
        return float(value)
    return value
