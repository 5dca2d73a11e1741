from .functional import EnergyFunctional
from .quadrature import GreenQuadrature
from .solver import FiniteDifferenceSolver


class OracleManager(object):
    '''Numerical ground truth. Nothing here calls the closed form modules.'''

    @classmethod
    def inverse_lengths(cls, p, drive):
        return FiniteDifferenceSolver.inverse_lengths(p, drive)

    @classmethod
    def solve_fd(cls, p, drive, rho, h, extent=None, tolerance=None):
        return FiniteDifferenceSolver.solve_fd(p, drive, rho, h, extent, tolerance)

    @classmethod
    def convolve_green(cls, eta, rho, x):
        return GreenQuadrature.convolve_green(eta, rho, x)

    @classmethod
    def q_quadrature(cls, sigma, eta_i, eta_j, d):
        return GreenQuadrature.q_quadrature(sigma, eta_i, eta_j, d)

    @classmethod
    def energy_from_profiles(cls, p, drive, rho, solution):
        return EnergyFunctional.energy_from_profiles(p, drive, rho, solution)

    @classmethod
    def extrapolated_energy(cls, p, drive, rho, h, extent=None):
        return EnergyFunctional.extrapolated_energy(p, drive, rho, h, extent)

    @classmethod
    def stationarity_residual(cls, p, drive, mu_a, mu_b):
        return EnergyFunctional.stationarity_residual(p, drive, mu_a, mu_b)
