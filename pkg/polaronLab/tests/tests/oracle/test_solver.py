import math

import numpy as np
import pytest
from django.test import SimpleTestCase

from polaronLab.apps.exceptions import GridTooCoarseException, GridTooNarrowException
from polaronLab.apps.modes.services import ModesManager
from polaronLab.apps.oracle.exceptions import SingularSystemException
from polaronLab.apps.oracle.models.solution import boundary_ratio
from polaronLab.apps.oracle.services import OracleManager
from polaronLab.apps.profiles.models import ImpurityDensity
from polaronLab.apps.profiles.services import ProfileManager
from polaronLab.apps.units_params.models import RamanDrive
from polaronLab.tests.utils.params import reference


def deviation(solution, profile):
    numerical = np.vstack([solution.theta_A, solution.theta_B])
    return np.max(np.abs(numerical - profile.theta)) / np.max(np.abs(profile.theta))


class TestFiniteDifferenceSolver(SimpleTestCase):
    def setUp(self):
        self.params = reference()
        self.rho = ImpurityDensity.single(self.params.sigma)

    def test_inverse_lengths(self):
        for omega in (0.0, 5e3):
            drive = RamanDrive(omega)
            numerical = OracleManager.inverse_lengths(self.params, drive)
            closed = ModesManager.effective_modes(self.params, drive)
            self.assertAlmostEqual(numerical[0] / closed.eta_plus, 1.0, places=12)
            self.assertAlmostEqual(numerical[1] / closed.eta_minus, 1.0, places=12)

    def test_unstable_mixture(self):
        with self.assertRaises(SingularSystemException):
            OracleManager.inverse_lengths(self.params.with_changes(g_AB=5e-37), RamanDrive.off())

    def test_zero_source(self):
        eta_plus = OracleManager.inverse_lengths(self.params, RamanDrive.off())[0]
        solution = OracleManager.solve_fd(self.params, RamanDrive.off(), ImpurityDensity.empty(self.params.sigma),
                                          0.05 / eta_plus)
        self.assertFalse(np.any(solution.theta_A))
        self.assertFalse(np.any(solution.theta_B))

    def test_grid_too_coarse(self):
        eta_plus = OracleManager.inverse_lengths(self.params, RamanDrive.off())[0]
        with self.assertRaises(GridTooCoarseException):
            OracleManager.solve_fd(self.params, RamanDrive.off(), self.rho, 0.1 / eta_plus)

    def test_grid_too_narrow(self):
        eta_plus, eta_minus = OracleManager.inverse_lengths(self.params, RamanDrive.off())
        with self.assertRaises(GridTooNarrowException):
            OracleManager.solve_fd(self.params, RamanDrive.off(), self.rho, 0.05 / eta_plus, extent=5 / eta_minus)

    def test_spacing_and_extent(self):
        eta_plus, eta_minus = OracleManager.inverse_lengths(self.params, RamanDrive.off())
        h = 0.03 / eta_plus
        solution = OracleManager.solve_fd(self.params, RamanDrive.off(), self.rho, h, extent=12 / eta_minus)
        self.assertLessEqual(solution.h, h)
        self.assertAlmostEqual(solution.grid[-1] * eta_minus, 12.0, places=9)
        self.assertLessEqual(solution.residual_norm, 1e-8)

    def test_default_extent(self):
        eta_plus, eta_minus = OracleManager.inverse_lengths(self.params, RamanDrive.off())
        solution = OracleManager.solve_fd(self.params, RamanDrive.off(), self.rho, 0.05 / eta_plus)
        self.assertAlmostEqual(solution.grid[-1] * eta_minus, 30.0, places=9)
        self.assertAlmostEqual(solution.grid[0] * eta_minus, -30.0, places=9)

    def test_boundary_decay(self):
        eta_plus = OracleManager.inverse_lengths(self.params, RamanDrive.off())[0]
        solution = OracleManager.solve_fd(self.params, RamanDrive.off(), self.rho, 0.05 / eta_plus)
        self.assertLess(boundary_ratio(solution), 1e-10)

    def test_matches_closed_form(self):
        drive = RamanDrive.off()
        eta_plus = OracleManager.inverse_lengths(self.params, drive)[0]
        solution = OracleManager.solve_fd(self.params, drive, self.rho, 0.01 / eta_plus)
        profile = ProfileManager.effective_deformations(self.params, drive, self.rho, grid=solution.grid)
        self.assertLess(deviation(solution, profile), 1e-4)

    @pytest.mark.slow
    def test_second_order(self):
        omega_lim = ModesManager.threshold_omega(self.params)
        for multiple in (0.0, 0.5, 1.0, 2.0):
            drive = RamanDrive(multiple * omega_lim)
            eta_plus = OracleManager.inverse_lengths(self.params, drive)[0]
            deviations = []
            for h in (0.02 / eta_plus, 0.01 / eta_plus):
                solution = OracleManager.solve_fd(self.params, drive, self.rho, h)
                profile = ProfileManager.effective_deformations(self.params, drive, self.rho, grid=solution.grid)
                deviations.append(deviation(solution, profile))
            self.assertLess(deviations[1], 1e-4)
            self.assertLess(abs(math.log2(deviations[0] / deviations[1]) - 2.0), 0.1)

    def test_pair(self):
        drive = RamanDrive(4e3)
        rho = ImpurityDensity.pair(self.params.sigma, 700e-9)
        eta_plus = OracleManager.inverse_lengths(self.params, drive)[0]
        solution = OracleManager.solve_fd(self.params, drive, rho, 0.01 / eta_plus)
        profile = ProfileManager.effective_deformations(self.params, drive, rho, grid=solution.grid)
        self.assertLess(deviation(solution, profile), 1e-4)
