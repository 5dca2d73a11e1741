import math
from collections import namedtuple

import numpy as np

from ..exceptions import InvalidDensityException


class ImpurityDensity(namedtuple('ImpurityDensity', ['centers', 'occupations', 'sigma'])):
    '''
    Sum of gaussian Wannier densities n_m (pi sigma^2)^-1/2 exp(-(x - x_m)^2 / sigma^2).
    sigma is the width parameter of that form, the standard deviation is sigma/sqrt(2).
    '''
    __slots__ = ()

    def __new__(cls, centers, occupations, sigma):
        centers = tuple(float(x) for x in centers)
        occupations = tuple(float(n) for n in occupations)
        sigma = float(sigma)
        if len(centers) != len(occupations):
            raise InvalidDensityException("Every center needs exactly one occupation.")
        if not sigma > 0 or not math.isfinite(sigma):
            raise InvalidDensityException("sigma must be strictly positive, got " + repr(sigma) + ".")
        if any(n < 0 or not math.isfinite(n) for n in occupations):
            raise InvalidDensityException("Occupations must be finite and >= 0.")
        if any(not math.isfinite(x) for x in centers):
            raise InvalidDensityException("Centers must be finite.")
        return super(ImpurityDensity, cls).__new__(cls, centers, occupations, sigma)

    @classmethod
    def empty(cls, sigma):
        return cls((), (), sigma)

    @classmethod
    def single(cls, sigma, center=0.0, occupation=1.0):
        return cls((center,), (occupation,), sigma)

    @classmethod
    def pair(cls, sigma, distance, occupation=1.0):
        '''Two sites at -d/2 and +d/2'''
        return cls((-distance / 2.0, distance / 2.0), (occupation, occupation), sigma)

    @classmethod
    def lattice(cls, sigma, count, spacing, occupations=None):
        '''count equally spaced sites centred on the origin'''
        if occupations is None:
            occupations = [1.0] * count
        offset = (count - 1) * spacing / 2.0
        return cls([m * spacing - offset for m in range(count)], occupations, sigma)

    @property
    def is_empty(self):
        return len(self.centers) == 0

    @property
    def total(self):
        return math.fsum(self.occupations)

    @property
    def span(self):
        if self.is_empty:
            return 0.0, 0.0
        return min(self.centers), max(self.centers)

    def separations(self):
        '''
        :return: matrix of |x_m - x_l|
        :rtype: numpy.ndarray
        '''
        centers = np.array(self.centers)
        return np.abs(centers[:, None] - centers[None, :])

    def evaluate(self, x):
        x = np.asarray(x, dtype=float)
        values = np.zeros_like(x)
        norm = 1.0 / (math.sqrt(math.pi) * self.sigma)
        for center, occupation in zip(self.centers, self.occupations):
            values = values + occupation * norm * np.exp(-((x - center) / self.sigma) ** 2)
        return values
