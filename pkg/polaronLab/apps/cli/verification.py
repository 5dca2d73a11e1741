'''
Closed forms against the numerical oracle. Every check yields a Check row,
a failing row makes the verify command exit with 1. Flagged rows report a
breach of a soft property and never fail the run.
'''
import logging
import math
from collections import namedtuple

import numpy as np

from polaronLab.apps.conf import polaron_setting
from polaronLab.apps.exceptions import PhysicsException
from polaronLab.apps.energy.exceptions import NoSignChangeException
from polaronLab.apps.energy.services import EnergyManager
from polaronLab.apps.modes.services import ModesManager
from polaronLab.apps.oracle.services import OracleManager
from polaronLab.apps.profiles.models import ImpurityDensity
from polaronLab.apps.profiles.services import ProfileManager
from polaronLab.apps.units_params.models import DjangoEnum, RamanDrive, Component
from polaronLab.apps.units_params.services import ParamsManager
from .export import CsvExporter
from .models import SweepSpec, GridRange, SweepVariable
from .sweep import SweepRunner

logger = logging.getLogger(__name__)

PUBLISHED_THRESHOLD_HZ = 923.0
TAMPER_FACTOR = 1.0 + 1e-6


class CheckStatus(DjangoEnum):
    PASS = 'pass'
    FAIL = 'fail'
    FLAG = 'flag'
    INFO = 'info'


class Check(namedtuple('Check', ['name', 'tolerance', 'measured', 'status', 'detail'])):
    __slots__ = ()

    @classmethod
    def compare(cls, name, measured, tolerance, detail=''):
        status = CheckStatus.PASS if measured <= tolerance else CheckStatus.FAIL
        return cls(name, tolerance, float(measured), status, detail)

    @classmethod
    def soft(cls, name, measured, tolerance, detail=''):
        status = CheckStatus.PASS if measured <= tolerance else CheckStatus.FLAG
        return cls(name, tolerance, float(measured), status, detail)

    @classmethod
    def info(cls, name, measured=None, detail=''):
        return cls(name, None, None if measured is None else float(measured), CheckStatus.INFO, detail)

    @property
    def failed(self):
        return self.status is CheckStatus.FAIL

    def as_line(self):
        tolerance = '-' if self.tolerance is None else format(self.tolerance, '.1e')
        measured = '-' if self.measured is None else format(self.measured, '.3e')
        line = "{:<36} {:>9} {:>11}  {:<4}".format(self.name, tolerance, measured, self.status.value.upper())
        return line + ("  " + self.detail if self.detail else "")


def relative_deviation(value, reference):
    value = np.asarray(value, dtype=float)
    reference = np.asarray(reference, dtype=float)
    scale = np.max(np.abs(reference))
    if scale == 0:
        return float(np.max(np.abs(value)))
    return float(np.max(np.abs(value - reference)) / scale)


class VerificationLevel(DjangoEnum):
    QUICK = 'quick'
    FULL = 'full'


# samples per check: kernel, q, energy draws, drive multiples of Omega_lim for the FD check
SAMPLES = {
    VerificationLevel.QUICK: (20, 5, 3, (0.0, 1.0)),
    VerificationLevel.FULL: (100, 50, 20, (0.0, 0.5, 1.0, 2.0)),
}


class VerificationSuite(object):
    '''
    :param tamper: scales every closed form value by TAMPER_FACTOR, the suite must then fail
    '''

    def __init__(self, params, drive, level=VerificationLevel.QUICK, tamper=False, seed=None):
        self.params = params
        self.drive = drive
        self.level = VerificationLevel(level)
        self.tamper = tamper
        self.seed = polaron_setting('VERIFY_SEED') if seed is None else seed
        self.kernel_samples, self.q_draws, self.energy_draws, self.fd_omegas = SAMPLES[self.level]

    def closed(self, value):
        if self.tamper:
            return np.asarray(value) * TAMPER_FACTOR
        return value

    def rng(self, offset):
        return np.random.default_rng(self.seed + offset)

    def run(self):
        '''
        :return: list of Check
        '''
        checks = [Check(warning, None, None, CheckStatus.FLAG, 'invariant warning')
                  for warning in self.params.invariant_warnings()]
        for step in (self.check_threshold, self.check_zero_drive_limit, self.check_strong_drive,
                     self.check_stationarity, self.check_fd_profiles, self.check_kernel,
                     self.check_overlaps, self.check_energies, self.check_pair_decay,
                     self.check_crossover, self.check_cross_term, self.check_determinism,
                     self.printed_forms):
            logger.debug("verify: %s", step.__name__)
            checks.extend(step())
        return checks

    def check_threshold(self):
        omega_lim = ModesManager.threshold_omega(self.params)
        hertz = omega_lim / (2.0 * math.pi)
        if not self.params.is_close(ParamsManager.reference_params()):
            return [Check.info('threshold omega_lim/2pi [Hz]', hertz)]
        deviation = abs(hertz - PUBLISHED_THRESHOLD_HZ) / PUBLISHED_THRESHOLD_HZ
        return [Check.compare('threshold vs 923 Hz', deviation, 0.02, format(hertz, '.6g') + ' Hz')]

    def check_zero_drive_limit(self):
        omega_lim = ModesManager.threshold_omega(self.params)
        closed = np.array(ModesManager.effective_modes(self.params, RamanDrive.off()).etas)
        numerical = np.array(OracleManager.inverse_lengths(self.params, RamanDrive.off()))
        small = ModesManager.effective_modes(self.params, RamanDrive(1e-6 * omega_lim)).etas
        closed = self.closed(closed)
        return [Check.compare('eta(0) vs eigensolver', relative_deviation(closed, numerical), 1e-12),
                Check.compare('eta(1e-6 omega_lim) vs eta(0)', relative_deviation(small, closed), 1e-5)]

    def check_strong_drive(self):
        omega = 1e3 * ModesManager.threshold_omega(self.params)
        modes = ModesManager.effective_modes(self.params, RamanDrive(omega))
        plateau, collapse = ModesManager.width_asymptotics(self.params)
        return [Check.compare('strong drive width plateau', abs(modes.widths[1] - plateau) / plateau, 0.01),
                Check.compare('strong drive width collapse',
                              abs(modes.widths[0] * math.sqrt(omega) - collapse) / collapse, 0.01)]

    def check_stationarity(self):
        mu_a = ModesManager.chemical_potential(self.params, self.drive, Component.A)
        mu_b = ModesManager.chemical_potential(self.params, self.drive, Component.B)
        residual = OracleManager.stationarity_residual(self.params, self.drive, mu_a, mu_b)
        return [Check.compare('chemical potentials stationary', residual, 1e-5)]

    def check_fd_profiles(self):
        omega_lim = ModesManager.threshold_omega(self.params)
        rho = ImpurityDensity.single(self.params.sigma)
        checks = []
        for multiple in self.fd_omegas:
            drive = RamanDrive(multiple * omega_lim)
            eta_plus = OracleManager.inverse_lengths(self.params, drive)[0]
            deviations = []
            for h in (0.02 / eta_plus, 0.01 / eta_plus):
                solution = OracleManager.solve_fd(self.params, drive, rho, h)
                profile = ProfileManager.effective_deformations(self.params, drive, rho, grid=solution.grid)
                analytic = self.closed(profile.theta)
                numerical = np.vstack([solution.theta_A, solution.theta_B])
                deviations.append(relative_deviation(numerical, analytic))
            order = math.log2(deviations[0] / deviations[1])
            label = format(multiple, 'g') + ' omega_lim'
            checks.append(Check.compare('FD profile at ' + label, deviations[1], 1e-4))
            checks.append(Check.compare('FD order at ' + label, abs(order - 2.0), 0.1,
                                        'order ' + format(order, '.3f')))
        return checks

    def check_kernel(self):
        rng = self.rng(1)
        worst = 0.0
        for _ in range(self.kernel_samples):
            sigma = self.params.sigma * rng.uniform(0.5, 2.0)
            eta = rng.uniform(1e6, 2e7)
            x = rng.uniform(-3.0, 3.0) * (1.0 / eta + sigma)
            closed = self.closed(ProfileManager.f_kernel(sigma, eta, x))
            numerical = OracleManager.convolve_green(eta, ImpurityDensity.single(sigma), x)
            worst = max(worst, relative_deviation(closed, numerical))
        return [Check.compare('f_kernel vs quadrature', worst, 1e-8, str(self.kernel_samples) + ' samples')]

    def check_overlaps(self):
        rng = self.rng(2)
        modes = ModesManager.effective_modes(self.params, RamanDrive.off())
        worst = 0.0
        for _ in range(self.q_draws):
            sigma = self.params.sigma * rng.uniform(0.5, 2.0)
            eta_i, eta_j = modes.eta_minus * rng.uniform(0.5, 2.0, size=2)
            d = rng.uniform(0.0, 3.0) * self.params.lattice_a
            closed = self.closed(EnergyManager.q_integral(sigma, eta_i, eta_j, d))
            numerical = OracleManager.q_quadrature(sigma, eta_i, eta_j, d)
            worst = max(worst, relative_deviation(closed, numerical))
        tolerance = polaron_setting('DEGENERACY_TOLERANCE')
        eta = modes.eta_minus
        sigma, d = self.params.sigma, self.params.lattice_a
        below = EnergyManager.q_integral(sigma, eta, eta * (1.0 + 0.99 * tolerance), d)
        above = EnergyManager.q_integral(sigma, eta, eta * (1.0 + 1.01 * tolerance), d)
        return [Check.compare('Q vs quadrature', worst, 1e-7, str(self.q_draws) + ' draws'),
                Check.compare('Q continuity at degeneracy', relative_deviation(self.closed(above), below),
                              1e-6)]

    def _draw(self, rng):
        factors = rng.uniform(0.8, 1.2, size=7)
        p = self.params
        density = factors[5]
        draw = p.with_changes(g_AA=p.g_AA * factors[0], g_BB=p.g_BB * factors[1], g_AB=p.g_AB * factors[2],
                              g_abA=p.g_abA * factors[3], g_abB=p.g_abB * factors[4],
                              n0_A=p.n0_A * density, n0_B=p.n0_B * density, sigma=p.sigma * factors[6])
        omega = rng.uniform(0.0, 2.0) * ModesManager.threshold_omega(draw)
        return draw, RamanDrive(omega), rng.uniform(0.0, 3.0) * p.lattice_a

    def check_energies(self):
        rng = self.rng(3)
        worst_single = worst_pair = 0.0
        for _ in range(self.energy_draws):
            p, drive, d = self._draw(rng)
            h = 0.02 / OracleManager.inverse_lengths(p, drive)[0]
            single = EnergyManager.single_impurity_energy(p, drive).total
            oracle_single = OracleManager.extrapolated_energy(p, drive, ImpurityDensity.single(p.sigma), h)
            pair = 2.0 * single + EnergyManager.pair_energy(p, drive, d).delta_e
            oracle_pair = OracleManager.extrapolated_energy(p, drive, ImpurityDensity.pair(p.sigma, d), h)
            worst_single = max(worst_single, relative_deviation(self.closed(single), oracle_single))
            worst_pair = max(worst_pair, relative_deviation(self.closed(pair), oracle_pair))
        detail = str(self.energy_draws) + ' draws'
        return [Check.compare('single energy vs FD', worst_single, 1e-5, detail),
                Check.compare('pair energy vs FD', worst_pair, 1e-5, detail)]

    def check_pair_decay(self):
        modes = ModesManager.effective_modes(self.params, RamanDrive.off())
        distances = np.linspace(0.0, 40.0 / modes.eta_minus, 401)
        curve = EnergyManager.pair_curve(self.params, RamanDrive.off(), distances)
        delta_e = np.asarray(curve.delta_e)
        minimum_at_contact = int(np.argmin(delta_e)) == 0
        far = distances >= 30.0 / modes.eta_minus
        decay = float(np.max(np.abs(delta_e[far])) / abs(delta_e[0]))
        return [Check.compare('pair minimum at d = 0', 0.0 if minimum_at_contact else 1.0, 0.0),
                Check.compare('pair decay beyond 30/eta_minus', decay, 1e-8)]

    def check_crossover(self):
        omega_lim = ModesManager.threshold_omega(self.params)
        try:
            crossover = EnergyManager.crossover_omega(self.params, self.params.lattice_a)
        except NoSignChangeException as e:
            return [Check('crossover in [0, 2 omega_lim]', 2.0, None, CheckStatus.FLAG, str(e))]
        ratio = crossover / omega_lim
        inside = ratio <= 2.0 and 0.5 <= ratio
        return [Check('crossover in [0, 2 omega_lim]', 2.0, ratio,
                      CheckStatus.PASS if inside else CheckStatus.FLAG, 'omega*/omega_lim')]

    def check_cross_term(self):
        omega_lim = ModesManager.threshold_omega(self.params)
        distances = np.linspace(0.0, 5.0 * self.params.lattice_a, 21)
        omegas = np.linspace(0.0, 2.0 * omega_lim, 11)
        surface = EnergyManager.surface(self.params, distances, omegas)
        delta_e = np.abs(np.asarray(surface.delta_e))
        cross = np.abs(np.asarray(surface.components['raman_cross']))
        nonzero = delta_e > 0
        ratio = float(np.max(cross[nonzero] / delta_e[nonzero])) if np.any(nonzero) else 0.0
        if ratio > 0.1:
            logger.warning("Raman cross term reaches %.3g of Delta E", ratio)
        return [Check.soft('Raman cross term share', ratio, 0.1,
                           'd in [0, 5a], omega in [0, 2 omega_lim]')]

    def check_determinism(self):
        spec = SweepSpec(SweepVariable.DISTANCE,
                         {'distance': GridRange(0.0, 5.0 * self.params.lattice_a, 64)}, normalize=True)
        exporter = CsvExporter('verify determinism', self.params, self.drive)
        workers = max(2, polaron_setting('SWEEP_WORKERS'))
        renders = [exporter.render(SweepRunner(self.params, self.drive, spec, workers=count).run())
                   for count in (1, workers, 1)]
        identical = renders[0] == renders[1] == renders[2]
        return [Check.compare('CSV bytes across runs and threads', 0.0 if identical else 1.0, 0.0)]

    def printed_forms(self):
        '''Published closed forms against the derived ones, reported only'''
        try:
            printed = ModesManager.printed_amplitudes(self.params, RamanDrive.off())
            published = EnergyManager.printed_coefficients(self.params)
        except PhysicsException as e:
            return [Check.info('printed forms skipped', detail=str(e))]
        derived = EnergyManager.coefficients(self.params)
        pairs = [('printed A0', published.a0, derived.a0),
                 ('printed K+ vs minus mode', printed.k_plus, derived.l_minus),
                 ('printed K- vs plus mode', printed.k_minus, derived.l_plus),
                 ('printed B_A vs b_minus', published.b_a, derived.b_minus),
                 ('printed B_B vs -b_plus', published.b_b, -derived.b_plus),
                 ('printed k+ vs mixing', published.k_plus, derived.mix_kplus),
                 ('printed k- vs mixing', published.k_minus, derived.mix_kminus)]
        return [Check.info(name, relative_deviation(value, reference)) for name, value, reference in pairs]
