import logging

import numpy as np

from polaronLab.apps.conf import polaron_setting
from polaronLab.apps.exceptions import GridTooCoarseException, GridTooNarrowException
from polaronLab.apps.modes.services import ModesManager
from . import kernels
from .models import DeformationProfile

logger = logging.getLogger(__name__)

MAX_SPACING = 0.05
MIN_COVERAGE = 10.0


class ProfileManager(object):
    @classmethod
    def f_kernel(cls, sigma, eta, x):
        return kernels.f_kernel(sigma, eta, x)

    @classmethod
    def default_grid(cls, modes, rho, points=None, margin=None):
        '''
        Uniform grid reaching margin/eta_minus beyond the outermost impurity
        :rtype: numpy.ndarray
        '''
        points = polaron_setting('GRID_POINTS') if points is None else points
        margin = polaron_setting('GRID_MARGIN') if margin is None else margin
        extent = margin / modes.eta_minus
        left, right = rho.span
        return np.linspace(left - extent, right + extent, int(points))

    @classmethod
    def _check_coverage(cls, grid, modes, rho):
        left, right = rho.span
        needed = MIN_COVERAGE / modes.eta_minus
        if grid[0] > left - needed or grid[-1] < right + needed:
            raise GridTooNarrowException("The grid must reach " + repr(needed) + " m beyond the outermost "
                                         "impurity on both sides.")

    @classmethod
    def effective_deformations(cls, p, drive, rho, grid=None, modes=None):
        '''
        theta'_k(x) = K_k sum_m n_m F(x - x_m) and theta = S theta'
        :rtype: DeformationProfile
        '''
        if modes is None:
            modes = ModesManager.effective_modes(p, drive)
        if grid is None:
            grid = cls.default_grid(modes, rho)
        grid = np.asarray(grid, dtype=float)
        cls._check_coverage(grid, modes, rho)
        theta_eff = np.zeros((2, grid.size))
        for branch, (eta, amplitude) in enumerate(zip(modes.etas, modes.amplitudes)):
            for center, occupation in zip(rho.centers, rho.occupations):
                theta_eff[branch] += occupation * kernels.f_kernel(rho.sigma, eta, grid - center)
            theta_eff[branch] *= amplitude
        theta = modes.to_physical(theta_eff)
        logger.debug("Profile on %d points for %d impurities", grid.size, len(rho.centers))
        return DeformationProfile(grid, theta_eff[0], theta_eff[1], theta[0], theta[1], modes)

    @classmethod
    def residual(cls, profile, p, drive, rho):
        '''
        Second order finite difference residual of theta'' - M theta - gamma rho on the
        interior points, scaled by max|gamma rho|
        :raises GridTooCoarseException: when h > 0.05/eta_plus
        '''
        grid = profile.grid
        h = profile.h
        if not np.allclose(np.diff(grid), h, rtol=1e-9, atol=0.0):
            raise GridTooCoarseException("The residual needs a uniform grid.")
        if h > MAX_SPACING / profile.modes.eta_plus:
            raise GridTooCoarseException("Grid spacing " + repr(h) + " m exceeds 0.05/eta_plus = " +
                                         repr(MAX_SPACING / profile.modes.eta_plus) + " m.")
        coupling = ModesManager.coupling_matrix(p, drive)
        theta = profile.theta
        source = np.outer(coupling.gamma, rho.evaluate(grid))
        laplacian = (theta[:, 2:] - 2.0 * theta[:, 1:-1] + theta[:, :-2]) / h ** 2
        misfit = laplacian - coupling.matrix.dot(theta[:, 1:-1]) - source[:, 1:-1]
        scale = np.max(np.abs(source))
        if scale == 0:
            return float(np.max(np.abs(misfit)))
        return float(np.max(np.abs(misfit)) / scale)
