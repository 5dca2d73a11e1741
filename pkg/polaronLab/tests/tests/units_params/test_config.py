import math

from django.conf import settings
from django.test import SimpleTestCase, override_settings
from scipy import constants

from polaronLab.apps.conf import DEFAULTS, polaron_setting
from polaronLab.apps.units_params import units
from polaronLab.apps.units_params.configfile import ConfigFileReader
from polaronLab.apps.units_params.constants import OLSHANII_CONSTANT
from polaronLab.apps.units_params.exceptions import ConfigSyntaxException, UnknownKeyException, \
    InvalidParamsException, UnitException, ConfinementResonanceException
from polaronLab.apps.units_params.forms import MixtureParamsForm
from polaronLab.apps.units_params.services import ParamsManager
from polaronLab.apps.units_params.units import Quantity
from polaronLab.tests.utils.params import REFERENCE_TEXT

BOHR = constants.physical_constants['Bohr radius'][0]


class TestConfigFileReader(SimpleTestCase):
    def setUp(self):
        self.keys = MixtureParamsForm.accepted_keys()

    def test_entries_and_lines(self):
        reader = ConfigFileReader.by_text("# comment\n\nsigma = 200 nm  # trailing\n", self.keys)
        self.assertEqual(reader.entries, {'sigma': '200 nm'})
        self.assertEqual(reader.line_numbers['sigma'], 3)
        self.assertEqual(reader.location_of('sigma'), '<config>:3')

    def test_missing_separator(self):
        with self.assertRaises(ConfigSyntaxException) as e:
            ConfigFileReader.by_text("sigma = 200 nm\nlattice_a 532 nm\n", self.keys)
        self.assertIn('<config>:2', str(e.exception))

    def test_unknown_key(self):
        with self.assertRaises(UnknownKeyException) as e:
            ConfigFileReader.by_text("\n\nbogus = 1\n", self.keys, source='test.cfg')
        self.assertIn('test.cfg:3', str(e.exception))

    def test_duplicate_key(self):
        with self.assertRaises(ConfigSyntaxException) as e:
            ConfigFileReader.by_text("sigma = 1 nm\nsigma = 2 nm\n", self.keys)
        self.assertIn('line 1', str(e.exception))

    def test_empty_value(self):
        with self.assertRaises(ConfigSyntaxException):
            ConfigFileReader.by_text("sigma =\n", self.keys)


class TestParamsManager(SimpleTestCase):
    def test_reference_file(self):
        params, drive = ParamsManager.load_config(settings.REFERENCE_CONFIG)
        self.assertTrue(params.is_close(ParamsManager.reference_params()))
        self.assertFalse(drive.is_on)

    def test_defaults_from_reference(self):
        params, _ = ParamsManager.load_text("sigma = 0.1 um\n")
        self.assertAlmostEqual(params.sigma, 1e-7, delta=1e-20)
        self.assertEqual(params.g_AA, ParamsManager.reference_params().g_AA)

    def test_units(self):
        params, drive = ParamsManager.load_text(REFERENCE_TEXT + "omega_rabi = 1 kHz\nm_b = 87 u\n")
        self.assertAlmostEqual(drive.omega_rabi, 2 * math.pi * 1e3, places=9)
        self.assertAlmostEqual(params.m_b / (87 * constants.atomic_mass), 1.0, places=14)
        self.assertAlmostEqual(params.lattice_a, 532e-9, delta=1e-21)

    def test_wrong_unit_names_line(self):
        with self.assertRaises(InvalidParamsException) as e:
            ParamsManager.load_text("n0_A = 3 um^-1\nsigma = 3 Hz\n", source='bad.cfg')
        self.assertIn('bad.cfg:2', str(e.exception))
        self.assertIn('sigma', str(e.exception))

    def test_invariant_violation_names_line(self):
        with self.assertRaises(InvalidParamsException) as e:
            ParamsManager.load_text("g_AB = -1e-37 J*m\n")
        self.assertIn('g_AB', str(e.exception))

    def test_two_photon_drive(self):
        _, drive = ParamsManager.load_text("omega1 = 1 kHz\nomega2 = 1 kHz\ndetuning = 4 kHz\n")
        self.assertAlmostEqual(drive.omega_rabi, 2 * math.pi * 1e3, places=9)

    def test_partial_two_photon_drive(self):
        with self.assertRaises(InvalidParamsException):
            ParamsManager.load_text("omega1 = 1 kHz\ndetuning = 4 kHz\n")

    def test_drive_given_twice(self):
        with self.assertRaises(InvalidParamsException):
            ParamsManager.load_text("omega_rabi = 1 Hz\nomega1 = 1 kHz\nomega2 = 1 kHz\ndetuning = 4 kHz\n")

    def test_g1d_weak_confinement_limit(self):
        mass = ParamsManager.reference_params().m_b
        omega_perp = 2 * math.pi * 34e3
        a3d = 1e-3 * BOHR
        expected = 2 * constants.hbar * omega_perp * a3d
        self.assertAlmostEqual(ParamsManager.g1d_from_3d(a3d, mass, omega_perp) / expected, 1.0, places=4)

    def test_g1d_reference_scattering_length(self):
        p = ParamsManager.reference_params()
        g1d = ParamsManager.g1d_from_3d(100 * BOHR, p.m_b, p.omega_perp)
        self.assertGreater(g1d, 0)
        self.assertLess(abs(g1d / p.g_AA - 1.0), 0.5)

    def test_g1d_zero_scattering_length(self):
        p = ParamsManager.reference_params()
        self.assertEqual(ParamsManager.g1d_from_3d(0.0, p.m_b, p.omega_perp), 0.0)

    def test_g1d_increases_below_resonance(self):
        p = ParamsManager.reference_params()
        a_perp = math.sqrt(constants.hbar / (p.m_b * p.omega_perp))
        lengths = [0.99 * a_perp / OLSHANII_CONSTANT * k / 50 for k in range(51)]
        couplings = [ParamsManager.g1d_from_3d(a3d, p.m_b, p.omega_perp) for a3d in lengths]
        for lower, upper in zip(couplings, couplings[1:]):
            self.assertLess(lower, upper)

    def test_confinement_resonance(self):
        p = ParamsManager.reference_params()
        a_perp = math.sqrt(constants.hbar / (p.m_b * p.omega_perp))
        with self.assertRaises(ConfinementResonanceException):
            ParamsManager.g1d_from_3d(a_perp / OLSHANII_CONSTANT, p.m_b, p.omega_perp)


class TestQuantity(SimpleTestCase):
    def test_parse(self):
        self.assertEqual(Quantity.parse('3', units.LENGTH), 3.0)
        self.assertEqual(Quantity.parse('2.5e-3 m', units.LENGTH), 2.5e-3)
        self.assertAlmostEqual(Quantity.parse('1 Hz', units.ANGULAR_FREQUENCY), 2 * math.pi, places=14)
        self.assertEqual(Quantity.parse('1 rad/s', units.ANGULAR_FREQUENCY), 1.0)

    def test_wrong_dimension(self):
        with self.assertRaises(UnitException):
            Quantity.parse('3 nm', units.COUPLING)

    def test_garbage(self):
        with self.assertRaises(UnitException):
            Quantity.parse('three', units.LENGTH)

    def test_format_frequency(self):
        text = Quantity.format_frequency(2 * math.pi)
        self.assertIn('rad/s', text)
        self.assertIn('(1.0 Hz)', text)


class TestPolaronSetting(SimpleTestCase):
    def test_settings_carry_the_defaults(self):
        self.assertEqual(settings.POLARON, DEFAULTS)

    @override_settings(POLARON={'GRID_POINTS': 1024})
    def test_configured_value(self):
        self.assertEqual(polaron_setting('GRID_POINTS'), 1024)
        self.assertEqual(polaron_setting('GRID_MARGIN'), DEFAULTS['GRID_MARGIN'])
