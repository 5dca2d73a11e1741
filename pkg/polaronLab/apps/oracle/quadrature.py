'''
Adaptive quadrature paths for the Green function convolution and for the
overlap of two convolved deformation kernels.
'''
import math
import warnings

import numpy as np
from scipy import integrate

from polaronLab.apps.profiles.models import ImpurityDensity
from .exceptions import QuadratureNonConvergenceException

GAUSSIAN_SUPPORT = 10.0
TAIL_LENGTHS = 40.0
INNER_EPSREL = 1e-11
OUTER_EPSREL = 1e-10
SUBDIVISIONS = 200


def _quad(function, lower, upper, points=None, epsabs=0.0, epsrel=INNER_EPSREL):
    with warnings.catch_warnings():
        warnings.simplefilter('error', integrate.IntegrationWarning)
        try:
            value, _ = integrate.quad(function, lower, upper, points=points, epsabs=epsabs,
                                      epsrel=epsrel, limit=SUBDIVISIONS)
        except integrate.IntegrationWarning as e:
            raise QuadratureNonConvergenceException("quad on [" + repr(lower) + ", " + repr(upper) + "]: " +
                                                    str(e))
    return value


class GreenQuadrature(object):
    @classmethod
    def convolve_green(cls, eta, rho, x):
        '''
        int exp(-eta|x - x'|)/(2 eta) rho(x') dx' by adaptive quadrature. The kink at
        x' = x is a forced break point.
        :param x: position or array of positions (m)
        '''
        if not eta > 0:
            raise ValueError("eta must be strictly positive.")
        positions = np.atleast_1d(np.asarray(x, dtype=float))
        norm = 1.0 / (math.sqrt(math.pi) * rho.sigma)
        values = np.zeros(positions.size)
        for index, position in enumerate(positions):
            total = 0.0
            for center, occupation in zip(rho.centers, rho.occupations):
                if occupation == 0:
                    continue
                lower = center - GAUSSIAN_SUPPORT * rho.sigma
                upper = center + GAUSSIAN_SUPPORT * rho.sigma
                points = [position] if lower < position < upper else None

                def integrand(source, center=center):
                    return (math.exp(-eta * abs(position - source)) / (2.0 * eta) *
                            norm * math.exp(-((source - center) / rho.sigma) ** 2))

                peak = 1.0 / (2.0 * eta)
                total += occupation * _quad(integrand, lower, upper, points=points, epsabs=1e-13 * peak)
            values[index] = total
        if np.ndim(x) == 0:
            return float(values[0])
        return values

    @classmethod
    def q_quadrature(cls, sigma, eta_i, eta_j, d):
        '''
        int F_i(x) F_j(x - d) dx with both F evaluated by convolve_green.
        The outer integral is split at both impurity centres.
        '''
        if not (sigma > 0 and eta_i > 0 and eta_j > 0):
            raise ValueError("sigma, eta_i and eta_j must be strictly positive.")
        first = ImpurityDensity.single(sigma, 0.0)
        second = ImpurityDensity.single(sigma, d)

        def integrand(x):
            return cls.convolve_green(eta_i, first, x) * cls.convolve_green(eta_j, second, x)

        tail = TAIL_LENGTHS / min(eta_i, eta_j) + GAUSSIAN_SUPPORT * sigma
        low, high = min(0.0, d), max(0.0, d)
        breaks = [low - tail, low]
        if high > low:
            breaks.append(high)
        breaks.append(high + tail)
        scale = 1.0 / (4.0 * eta_i * eta_j * min(eta_i, eta_j))
        return math.fsum(_quad(integrand, a, b, epsabs=1e-13 * scale, epsrel=OUTER_EPSREL)
                         for a, b in zip(breaks[:-1], breaks[1:]))
