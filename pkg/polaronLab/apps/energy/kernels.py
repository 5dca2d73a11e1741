'''
Closed forms of the two impurity overlaps. All exp*erfc products go through
exp_erfc; Q and R are returned in m^3, the pair kernel in m.
'''
import math

import numpy as np

from polaronLab.apps.conf import polaron_setting
from polaronLab.apps.profiles.kernels import f_kernel
from polaronLab.helper_apps.specfun.functions import exp_erfc

SQRT2 = math.sqrt(2.0)


def _scalar_or_array(value):
    if np.ndim(value) == 0:
        return float(value)
    return value


def tail_sum(sigma, eta, d):
    '''
    exp(s^2 eta^2/2 - d eta) erfc((s^2 eta - d)/(sqrt2 s)) + the same with d -> -d
    '''
    d = np.asarray(d, dtype=float)
    shift = sigma * sigma * eta * eta / 2.0
    scale = SQRT2 * sigma
    return (exp_erfc(shift - d * eta, (sigma * sigma * eta - d) / scale) +
            exp_erfc(shift + d * eta, (sigma * sigma * eta + d) / scale))


def pair_kernel(sigma, eta, d):
    '''
    Green function integrated against two unit gaussians whose centres are d apart
    '''
    return f_kernel(SQRT2 * sigma, eta, d)


def r_integral(sigma, eta, d):
    '''
    Overlap of two equal width deformation kernels of the same inverse length
    '''
    d = np.asarray(d, dtype=float)
    shift = sigma * sigma * eta * eta / 2.0
    scale = SQRT2 * sigma
    inner = exp_erfc(shift - d * eta, (sigma * sigma * eta - d) / scale)
    outer = exp_erfc(shift + d * eta, (sigma * sigma * eta + d) / scale)
    gaussian = 2.0 * math.sqrt(2.0 / math.pi) * sigma * eta * np.exp(-d * d / (2.0 * sigma * sigma))
    value = (gaussian + inner * (1.0 + eta * d - sigma * sigma * eta * eta) -
             outer * (eta * d + sigma * sigma * eta * eta - 1.0)) / (8.0 * eta ** 3)
    return _scalar_or_array(value)


def is_degenerate(eta_i, eta_j, tolerance=None):
    tolerance = polaron_setting('DEGENERACY_TOLERANCE') if tolerance is None else tolerance
    return abs(eta_i - eta_j) <= tolerance * max(eta_i, eta_j)


def q_integral(sigma, eta_i, eta_j, d, tolerance=None):
    '''
    Overlap int F_i(x) F_j(x - d) dx of two deformation kernels
    :param tolerance: relative eta difference below which the equal-eta form is used
    '''
    if is_degenerate(eta_i, eta_j, tolerance):
        return r_integral(sigma, (eta_i + eta_j) / 2.0, d)
    if eta_i < eta_j:
        eta_i, eta_j = eta_j, eta_i
    value = ((eta_i * tail_sum(sigma, eta_j, d) - eta_j * tail_sum(sigma, eta_i, d)) /
             (4.0 * eta_i * eta_j * (eta_i * eta_i - eta_j * eta_j)))
    return _scalar_or_array(value)


def overlap_matrix(sigma, etas, d):
    '''
    :return: array [k][l] of q_integral for the two branches
    '''
    cross = q_integral(sigma, etas[0], etas[1], d)
    return [[q_integral(sigma, etas[0], etas[0], d), cross],
            [cross, q_integral(sigma, etas[1], etas[1], d)]]
