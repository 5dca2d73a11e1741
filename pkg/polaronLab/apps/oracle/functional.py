import math

import numpy as np
from scipy import constants, integrate, optimize

from .solver import FiniteDifferenceSolver


class EnergyFunctional(object):
    '''
    E = A0 sum n + sum_i g_i sqrt(n_i) int rho theta_i - hbar Omega int theta_A theta_B
    evaluated on a finite difference solution
    '''

    @classmethod
    def uniform_energy(cls, p, rho):
        n_a, n_b = p.model_densities
        return (p.g_abA * n_a + p.g_abB * n_b) * rho.total

    @classmethod
    def energy_from_profiles(cls, p, drive, rho, solution):
        n_a, n_b = p.model_densities
        density = rho.evaluate(solution.grid)
        overlap_a = integrate.trapezoid(density * solution.theta_A, solution.grid)
        overlap_b = integrate.trapezoid(density * solution.theta_B, solution.grid)
        interaction = p.g_abA * math.sqrt(n_a) * overlap_a + p.g_abB * math.sqrt(n_b) * overlap_b
        raman = -constants.hbar * drive.omega_rabi * integrate.trapezoid(solution.theta_A * solution.theta_B,
                                                                         solution.grid)
        return cls.uniform_energy(p, rho) + interaction + raman

    @classmethod
    def extrapolated_energy(cls, p, drive, rho, h, extent=None):
        '''
        Richardson combination of two nested grids, h and h/2
        '''
        coarse = FiniteDifferenceSolver.solve_fd(p, drive, rho, h, extent)
        fine = FiniteDifferenceSolver.solve_fd(p, drive, rho, coarse.h / 2.0, extent)
        coarse_energy = cls.energy_from_profiles(p, drive, rho, coarse)
        fine_energy = cls.energy_from_profiles(p, drive, rho, fine)
        return (4.0 * fine_energy - coarse_energy) / 3.0

    @classmethod
    def stationarity_residual(cls, p, drive, mu_a, mu_b):
        '''
        Gradient of the uniform energy density at psi_i = sqrt(n_i), relative to mu_i psi_i.
        Zero when mu_a and mu_b are the chemical potentials.
        '''
        n_a, n_b = p.model_densities
        h_omega = constants.hbar * drive.omega_rabi

        def density(psi):
            psi_a, psi_b = psi
            return (-mu_a * psi_a ** 2 + p.g_AA * psi_a ** 4 - mu_b * psi_b ** 2 + p.g_BB * psi_b ** 4 +
                    p.g_AB * psi_a ** 2 * psi_b ** 2 - h_omega * psi_a * psi_b)

        psi = np.array([math.sqrt(n_a), math.sqrt(n_b)])
        gradient = optimize.approx_fprime(psi, density, 1e-7 * psi)
        scale = np.abs(np.array([mu_a, mu_b]) * psi)
        return float(np.max(np.abs(gradient) / scale))
