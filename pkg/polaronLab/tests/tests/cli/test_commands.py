import io
import math
import os

import pandas as pd
import pytest
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from polaronLab.apps.modes.services import ModesManager
from polaronLab.tests.utils.params import ConfigFiles, reference


def run(name, *args, **options):
    out, err = io.StringIO(), io.StringIO()
    call_command(name, *args, stdout=out, stderr=err, **options)
    return out.getvalue(), err.getvalue()


def report_value(text, key):
    for line in text.splitlines():
        if line.startswith(key + ' '):
            return line.split('=', 1)[1].split()
    raise AssertionError(key + " missing from report")


class CommandTestCase(SimpleTestCase):
    def setUp(self):
        self.files = ConfigFiles()

    def tearDown(self):
        self.files.cleanup()

    def assertExitCode(self, code, name, *args, **options):
        with self.assertRaises(CommandError) as e:
            run(name, *args, **options)
        self.assertEqual(e.exception.returncode, code)
        return str(e.exception)


class TestModesCommand(CommandTestCase):
    def test_reference(self):
        out, _ = run('modes')
        hertz = float(report_value(out, 'omega_lim')[2].lstrip('('))
        self.assertLess(abs(hertz - 923.0) / 923.0, 0.02)
        self.assertIn('mu_A', out)
        self.assertIn('width_minus_plateau', out)
        self.assertEqual(float(report_value(out, 'model_n_A')[0]), 1.5e6)
        self.assertEqual(float(report_value(out, 'model_n_B')[0]), 1.5e6)

    def test_twelve_digits(self):
        out, _ = run('modes')
        mantissa = report_value(out, 'eta_plus')[0].split('e')[0].replace('.', '')
        self.assertLessEqual(len(mantissa), 12)
        self.assertGreater(len(mantissa), 6)

    def test_omega_override(self):
        out, _ = run('modes', '--omega', '1 kHz')
        self.assertIn('6283.185307', out)

    def test_zero_coupling(self):
        path = self.files.with_changes(g_AB='0 J*m')
        message = self.assertExitCode(3, 'modes', '--config', path)
        self.assertIn('ZeroInterComponentCouplingException', message)

    def test_config_error(self):
        path = self.files.write("sigma = 200 nm\nbogus = 1\n")
        message = self.assertExitCode(2, 'modes', '--config', path)
        self.assertIn(':2', message)

    def test_bad_omega(self):
        self.assertExitCode(2, 'modes', '--omega', '3 nm')

    def test_missing_config(self):
        self.assertExitCode(4, 'modes', '--config', self.files.path('missing.cfg'))

    def test_invariant_warning_on_stderr(self):
        path = self.files.with_changes(sigma='600 nm')
        _, err = run('modes', '--config', path)
        self.assertIn('warning: sigma', err)


class TestEnergyCommands(CommandTestCase):
    def test_single(self):
        out, _ = run('energy-single')
        self.assertLess(float(report_value(out, 'binding')[0]), 0)
        self.assertEqual(float(report_value(out, 'raman_cross')[0]), 0.0)

    def test_pair_normalized_contact(self):
        out, _ = run('energy-pair', '--distance', '0 nm', '--normalize')
        self.assertAlmostEqual(float(report_value(out, 'normalized')[0]), -1.0, places=10)

    def test_pair_needs_distance(self):
        self.assertExitCode(2, 'energy-pair')

    def test_pair_negative_distance(self):
        self.assertExitCode(2, 'energy-pair', '--distance', '-5 nm')


class TestProfileCommand(CommandTestCase):
    def test_csv(self):
        path = self.files.path('profile.csv')
        run('profile', '--distance', '532 nm', '--points', '2001', '--out', path)
        with open(path) as f:
            text = f.read()
        self.assertTrue(text.startswith('# polaronLab profile\n'))
        self.assertIn('# config: sigma = ', text)
        frame = pd.read_csv(path, comment='#')
        self.assertEqual(list(frame.columns), ['x', 'theta_eff_plus', 'theta_eff_minus', 'theta_A', 'theta_B'])
        self.assertEqual(len(frame), 2001)

    def test_stdout(self):
        out, _ = run('profile', '--points', '1001')
        self.assertIn('# units: x [m]', out)


class TestSweepCommand(CommandTestCase):
    def sweep(self, name, *args):
        path = self.files.path(name)
        run('sweep', '--out', path, *args)
        with open(path, 'rb') as f:
            return f.read()

    def test_distance_normalized(self):
        self.sweep('pair.csv', '--grid', '0nm,2um,41', '--normalize')
        frame = pd.read_csv(self.files.path('pair.csv'), comment='#')
        self.assertEqual(frame['normalized'].idxmin(), 0)
        self.assertAlmostEqual(frame['normalized'][0], -1.0, places=12)
        self.assertEqual(list(frame.columns)[0], 'd')

    def test_deterministic(self):
        first = self.sweep('a.csv', '--grid', '0nm,2um,41', '--workers', '1')
        second = self.sweep('b.csv', '--grid', '0nm,2um,41', '--workers', '4')
        third = self.sweep('c.csv', '--grid', '0nm,2um,41', '--workers', '4')
        self.assertEqual(first, second)
        self.assertEqual(second, third)

    def test_round_trip_floats(self):
        self.sweep('pair.csv', '--grid', '0nm,2um,5')
        frame = pd.read_csv(self.files.path('pair.csv'), comment='#', float_precision='round_trip')
        self.assertEqual(frame['d'][4], 2e-6)

    def test_modes_table(self):
        self.sweep('modes.csv', '--variable', 'omega', '--table', 'modes', '--omega-grid', '0,1000,11',
                   '--relative', '--normalize')
        frame = pd.read_csv(self.files.path('modes.csv'), comment='#')
        self.assertAlmostEqual(frame['omega_over_lim'].iloc[-1], 1000.0, places=9)
        self.assertEqual(frame['width_plus_normalized'][0], 1.0)
        plateau, collapse = ModesManager.width_asymptotics(reference())
        strongest = frame.iloc[-1]
        self.assertLess(abs(strongest['width_minus'] - plateau) / plateau, 0.01)
        self.assertLess(abs(strongest['width_plus'] * math.sqrt(strongest['omega']) - collapse) / collapse, 0.01)
        self.assertTrue(frame['width_plus'].is_monotonic_decreasing)

    def test_single_table(self):
        self.sweep('single.csv', '--variable', 'omega', '--table', 'single', '--omega-grid', '0Hz,2kHz,5',
                   '--normalize')
        frame = pd.read_csv(self.files.path('single.csv'), comment='#')
        self.assertEqual(frame['normalized'][0], -1.0)
        self.assertEqual(list(frame.columns[:2]), ['omega', 'omega_over_lim'])

    def test_surface(self):
        self.sweep('surface.csv', '--variable', 'both', '--grid', '0nm,1um,3', '--omega-grid', '0,2,4',
                   '--relative')
        frame = pd.read_csv(self.files.path('surface.csv'), comment='#')
        self.assertEqual(len(frame), 12)
        self.assertEqual(list(frame.columns[:3]), ['d', 'omega', 'omega_over_lim'])

    def test_log_grid(self):
        self.sweep('log.csv', '--grid', '1nm,1um,4,log')
        frame = pd.read_csv(self.files.path('log.csv'), comment='#')
        self.assertAlmostEqual(frame['d'][1] / frame['d'][0], 10.0, places=9)

    def test_invalid_grid(self):
        self.assertExitCode(2, 'sweep', '--grid', '1um,0nm,10')
        self.assertExitCode(2, 'sweep', '--grid', '0nm,1um,1')
        self.assertExitCode(2, 'sweep', '--grid', '0nm,1um,10,log')
        self.assertExitCode(2, 'sweep', '--variable', 'omega')

    def test_unwritable_output(self):
        path = os.path.join(self.files.path('missing'), 'out.csv')
        self.assertExitCode(4, 'sweep', '--grid', '0nm,1um,3', '--out', path)


@pytest.mark.slow
class TestVerifyCommand(CommandTestCase):
    def test_quick_reference(self):
        out, _ = run('verify')
        self.assertIn('0 failed', out)
        self.assertIn('threshold vs 923 Hz', out)

    @override_settings(DEBUG=True)
    def test_tampered_closed_forms(self):
        message = self.assertExitCode(1, 'verify', '--tamper')
        self.assertIn('f_kernel vs quadrature', message)

    @override_settings(DEBUG=False)
    def test_tamper_needs_debug(self):
        self.assertExitCode(2, 'verify', '--tamper')

    def test_invariant_warning_reported(self):
        path = self.files.with_changes(sigma='600 nm')
        try:
            out, _ = run('verify', '--config', path)
        except CommandError as e:
            self.fail("verify failed: " + str(e))
        self.assertIn('sigma = ', out)
        self.assertIn('FLAG', out)
