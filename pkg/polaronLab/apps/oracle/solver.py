'''
Finite difference solution of theta'' - M theta = gamma rho with zero Dirichlet
boundaries. Unknowns are interleaved [theta_A(x_1), theta_B(x_1), theta_A(x_2), ...],
which makes the system pentadiagonal.
'''
import logging
import math

import numpy as np
from scipy import constants, linalg

from polaronLab.apps.conf import polaron_setting
from polaronLab.apps.exceptions import GridTooCoarseException, GridTooNarrowException
from .exceptions import SingularSystemException
from .models import FdSolution
from .models.solution import boundary_ratio

logger = logging.getLogger(__name__)

MAX_SPACING = 0.05
MIN_EXTENT = 12.0
BOUNDARY_DECAY = 1e-10


class FiniteDifferenceSolver(object):
    @classmethod
    def assemble(cls, p, drive):
        '''
        Coupling matrix and sources built from the parameters alone
        :return: (2x2 matrix in 1/m^2, source vector)
        '''
        factor = 2.0 * p.m_b / constants.hbar ** 2
        n_a, n_b = p.model_densities
        half_raman = constants.hbar * drive.omega_rabi / 2.0
        off_diagonal = 2.0 * p.g_AB * math.sqrt(n_a * n_b) - half_raman
        matrix = factor * np.array([[4.0 * p.g_AA * n_a + half_raman * math.sqrt(n_b / n_a), off_diagonal],
                                    [off_diagonal, 4.0 * p.g_BB * n_b + half_raman * math.sqrt(n_a / n_b)]])
        gamma = factor * np.array([p.g_abA * math.sqrt(n_a), p.g_abB * math.sqrt(n_b)])
        return matrix, gamma

    @classmethod
    def inverse_lengths(cls, p, drive):
        '''
        :return: (eta_plus, eta_minus) from the numerical eigenvalues
        :raises SingularSystemException: for a non positive eigenvalue
        '''
        matrix, _ = cls.assemble(p, drive)
        eigenvalues = linalg.eigvalsh(matrix)
        if eigenvalues[0] <= 0:
            raise SingularSystemException("Coupling matrix eigenvalue " + repr(float(eigenvalues[0])) +
                                          " 1/m^2 is not positive, the mixture is unstable.")
        return math.sqrt(eigenvalues[1]), math.sqrt(eigenvalues[0])

    @classmethod
    def default_extent(cls, p, drive):
        return polaron_setting('GRID_MARGIN') / cls.inverse_lengths(p, drive)[1]

    @classmethod
    def grid(cls, rho, h, extent):
        left, right = rho.span
        start, stop = left - extent, right + extent
        count = int(math.ceil((stop - start) / h - 1e-9)) + 1
        return np.linspace(start, stop, count)

    @classmethod
    def _banded(cls, matrix, h, size):
        scaled = h * h * matrix
        ab = np.zeros((5, 2 * size))
        ab[2, 0::2] = 2.0 + scaled[0, 0]
        ab[2, 1::2] = 2.0 + scaled[1, 1]
        ab[1, 1::2] = scaled[0, 1]
        ab[3, 0::2] = scaled[1, 0]
        ab[0, 2:] = -1.0
        ab[4, :-2] = -1.0
        return ab

    @classmethod
    def _banded_dot(cls, ab, vector):
        result = ab[2] * vector
        result[:-1] += ab[1, 1:] * vector[1:]
        result[:-2] += ab[0, 2:] * vector[2:]
        result[1:] += ab[3, :-1] * vector[:-1]
        result[2:] += ab[4, :-2] * vector[:-2]
        return result

    @classmethod
    def solve_fd(cls, p, drive, rho, h, extent=None, tolerance=None):
        '''
        :param h: target grid spacing (m), the actual spacing is <= h
        :param extent: distance kept beyond the outermost impurity (m)
        :rtype: FdSolution
        '''
        tolerance = polaron_setting('FD_RESIDUAL_TOLERANCE') if tolerance is None else tolerance
        eta_plus, eta_minus = cls.inverse_lengths(p, drive)
        extent = cls.default_extent(p, drive) if extent is None else extent
        if h > MAX_SPACING / eta_plus:
            raise GridTooCoarseException("h = " + repr(h) + " m exceeds 0.05/eta_plus = " +
                                         repr(MAX_SPACING / eta_plus) + " m.")
        if extent < MIN_EXTENT / eta_minus:
            raise GridTooNarrowException("extent = " + repr(extent) + " m is below 12/eta_minus = " +
                                         repr(MIN_EXTENT / eta_minus) + " m.")
        matrix, gamma = cls.assemble(p, drive)
        grid = cls.grid(rho, h, extent)
        spacing = (grid[-1] - grid[0]) / (grid.size - 1)
        interior = grid[1:-1]
        rhs = (-spacing * spacing * np.outer(rho.evaluate(interior), gamma)).ravel()
        ab = cls._banded(matrix, spacing, interior.size)
        try:
            unknowns = linalg.solve_banded((2, 2), ab, rhs)
        except (linalg.LinAlgError, ValueError) as e:
            raise SingularSystemException("Banded solve failed: " + str(e))
        scale = np.max(np.abs(rhs))
        misfit = np.max(np.abs(cls._banded_dot(ab, unknowns) - rhs))
        residual_norm = float(misfit / scale) if scale > 0 else float(misfit)
        if not residual_norm <= tolerance:
            raise SingularSystemException("Residual " + repr(residual_norm) + " exceeds tolerance " +
                                          repr(tolerance) + ".")
        theta_a = np.zeros(grid.size)
        theta_b = np.zeros(grid.size)
        theta_a[1:-1] = unknowns[0::2]
        theta_b[1:-1] = unknowns[1::2]
        solution = FdSolution(grid, theta_a, theta_b, float(spacing), residual_norm)
        ratio = boundary_ratio(solution)
        if ratio > BOUNDARY_DECAY:
            logger.warning("Deformation at the boundary is %.3g of its peak, widen the extent", ratio)
        logger.debug("FD solve on %d points, h = %r m, residual %.3g", grid.size, spacing, residual_norm)
        return solution
