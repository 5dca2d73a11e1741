import math

from django.test import SimpleTestCase

from polaronLab.apps.exceptions import ConfigException
from polaronLab.apps.units_params.exceptions import InvalidParamsException, ZeroDetuningException, \
    NegativeCouplingException
from polaronLab.apps.units_params.models import MixtureParams, RamanDrive, DensityConvention, Component
from polaronLab.tests.utils.params import reference


class TestMixtureParams(SimpleTestCase):
    def setUp(self):
        self.params = reference()

    def test_reference_values(self):
        self.assertEqual(self.params.n0_A, 3e6)
        self.assertEqual(self.params.lattice_a, 532e-9)
        self.assertIs(self.params.density_convention, DensityConvention.PER_COMPONENT)

    def test_symbol_density(self):
        self.assertEqual(self.params.symbol_density, 3e6)
        total = self.params.with_changes(density_convention=DensityConvention.TOTAL)
        self.assertEqual(total.symbol_density, 6e6)

    def test_model_densities_sum_to_symbol_density(self):
        for convention in DensityConvention:
            p = self.params.with_changes(density_convention=convention, n0_B=1e6)
            n_a, n_b = p.model_densities
            self.assertAlmostEqual((n_a + n_b) / p.symbol_density, 1.0, places=14)
            self.assertAlmostEqual(n_a / n_b, 3.0, places=12)

    def test_equal_densities(self):
        self.assertTrue(self.params.equal_densities)
        self.assertFalse(self.params.with_changes(n0_B=2e6).equal_densities)

    def test_component_access(self):
        self.assertEqual(self.params.intra_coupling(Component.A), self.params.g_AA)
        self.assertEqual(self.params.intra_coupling('B'), self.params.g_BB)
        self.assertEqual(self.params.impurity_coupling(Component.B), self.params.g_abB)
        self.assertEqual(self.params.density(Component.A), 1.5e6)
        self.assertIs(Component.A.other, Component.B)

    def test_strictly_positive(self):
        for name in ('m_b', 'n0_A', 'g_AA', 'sigma', 'lattice_a', 'omega_perp'):
            with self.assertRaises(InvalidParamsException):
                self.params.with_changes(**{name: 0.0})

    def test_zero_inter_component_coupling_allowed(self):
        self.assertEqual(self.params.with_changes(g_AB=0.0).g_AB, 0.0)
        with self.assertRaises(InvalidParamsException):
            self.params.with_changes(g_AB=-1e-38)

    def test_not_finite(self):
        with self.assertRaises(ConfigException):
            self.params.with_changes(g_abA=math.nan)

    def test_negative_impurity_coupling_allowed(self):
        self.assertLess(self.params.with_changes(g_abB=-1e-35).g_abB, 0)

    def test_is_close(self):
        self.assertTrue(self.params.is_close(self.params.with_changes(sigma=200e-9 * (1 + 1e-12))))
        self.assertFalse(self.params.is_close(self.params.with_changes(sigma=210e-9)))

    def test_as_dict(self):
        values = self.params.as_dict()
        self.assertEqual(values['density_convention'], 'per_component')
        self.assertEqual(MixtureParams(**values), self.params)

    def test_no_warnings_for_reference(self):
        self.assertEqual(self.params.invariant_warnings(), [])

    def test_sigma_warning(self):
        warnings = self.params.with_changes(sigma=600e-9).invariant_warnings()
        self.assertEqual(len(warnings), 1)
        self.assertIn('sigma', warnings[0])

    def test_one_dimensional_warning(self):
        warnings = self.params.with_changes(omega_perp=1e3).invariant_warnings()
        self.assertTrue(warnings)
        self.assertTrue(all('1D condition' in warning for warning in warnings))


class TestRamanDrive(SimpleTestCase):
    def test_off(self):
        self.assertFalse(RamanDrive.off().is_on)
        self.assertTrue(RamanDrive(1.0).is_on)

    def test_negative(self):
        with self.assertRaises(InvalidParamsException):
            RamanDrive(-1.0)

    def test_two_photon(self):
        drive = RamanDrive.by_two_photon(2.0, 3.0, 4.0)
        self.assertEqual(drive.omega_rabi, 6.0)

    def test_zero_detuning(self):
        with self.assertRaises(ZeroDetuningException):
            RamanDrive.by_two_photon(1.0, 1.0, 0.0)

    def test_negative_detuning(self):
        with self.assertRaises(NegativeCouplingException):
            RamanDrive.by_two_photon(1.0, 1.0, -2.0)

    def test_zero_beam(self):
        self.assertEqual(RamanDrive.by_two_photon(0.0, 1.0, -2.0).omega_rabi, 0.0)
