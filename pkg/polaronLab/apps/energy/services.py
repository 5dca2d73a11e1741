import logging
import math

import numpy as np
from scipy import constants, optimize

from polaronLab.apps.modes.services import ModesManager
from polaronLab.apps.units_params.models import RamanDrive
from . import kernels
from .exceptions import NoSignChangeException, InvalidDistanceException
from .models import EnergyCoefficients, PrintedCoefficients, SingleImpurityEnergy, PairEnergy, \
    LatticeEnergy, EnergyCurve, CurveKind

logger = logging.getLogger(__name__)

HBAR = constants.hbar

CROSSOVER_BRACKET = 10.0
CROSSOVER_SCAN_POINTS = 41
MAX_PROBE_SPACINGS = 5.0


def _check_distance(d):
    if np.any(np.asarray(d) < 0):
        raise InvalidDistanceException("Separations must be >= 0.")


class EnergyManager(object):
    @classmethod
    def coefficients(cls, p, drive=None, modes=None):
        '''
        A0 and the per branch prefactors. l_plus/l_minus are the amplitudes in
        (k, 1) column normalisation.
        :rtype: EnergyCoefficients
        '''
        drive = RamanDrive.off() if drive is None else drive
        if modes is None:
            modes = ModesManager.effective_modes(p, drive)
        n_a, n_b = p.model_densities
        a0 = p.g_abA * n_a + p.g_abB * n_b
        b = -HBAR ** 2 / (2.0 * p.m_b) * modes.amplitudes ** 2
        l = modes.transform[1] * modes.amplitudes
        return EnergyCoefficients(a0, float(b[0]), float(b[1]), float(l[0]), float(l[1]),
                                  modes.mix_kplus, modes.mix_kminus)

    @classmethod
    def printed_coefficients(cls, p):
        '''
        A0 and B as published for zero drive, kept for comparison only.
        They relate to the derived values as b_a = b_minus and b_b = -b_plus.
        :rtype: PrintedCoefficients
        '''
        ModesManager.closed_form_eigenvalues(p, RamanDrive.off())
        n = p.symbol_density
        split = p.g_AA - p.g_BB
        beta0 = math.hypot(split, p.g_AB)
        k_plus = (split + beta0) / p.g_AB
        k_minus = (split - beta0) / p.g_AB
        root = math.sqrt(n / 2.0)
        scale = root * p.m_b * p.g_AB / (HBAR ** 2 * beta0)
        l_a = scale * (p.g_abA - k_plus * p.g_abB)
        l_b = scale * (p.g_abA - k_minus * p.g_abB)
        return PrintedCoefficients(n / 2.0 * (p.g_abA + p.g_abB),
                                   root * (k_minus * p.g_abA + p.g_abB) * l_a,
                                   root * (k_plus * p.g_abA + p.g_abB) * l_b,
                                   k_plus, k_minus)

    @classmethod
    def q_integral(cls, sigma, eta_i, eta_j, d):
        _check_distance(d)
        return kernels.q_integral(sigma, eta_i, eta_j, d)

    @classmethod
    def _raman_overlap(cls, p, drive, modes, d):
        '''-hbar Omega sum_kl W_kl Q_kl(d), zero without drive'''
        if not drive.is_on:
            return np.zeros_like(np.asarray(d, dtype=float))
        weights = modes.weights()
        overlaps = kernels.overlap_matrix(p.sigma, modes.etas, d)
        total = sum(weights[k, l] * np.asarray(overlaps[k][l]) for k in range(2) for l in range(2))
        return -HBAR * drive.omega_rabi * total

    @classmethod
    def _branch_terms(cls, p, modes, d):
        b = -HBAR ** 2 / (2.0 * p.m_b) * modes.amplitudes ** 2
        return [b[k] * np.asarray(kernels.pair_kernel(p.sigma, modes.etas[k], d)) for k in range(2)]

    @classmethod
    def single_impurity_energy(cls, p, drive):
        '''
        One impurity with unit occupation
        :rtype: SingleImpurityEnergy
        '''
        modes = ModesManager.effective_modes(p, drive)
        a0 = cls.coefficients(p, drive, modes).a0
        plus, minus = cls._branch_terms(p, modes, 0.0)
        raman = float(cls._raman_overlap(p, drive, modes, 0.0))
        total = a0 + float(plus) + float(minus) + raman
        return SingleImpurityEnergy(total, total - a0, raman)

    @classmethod
    def pair_energy(cls, p, drive, d, modes=None):
        '''
        Delta E(d) = E(two impurities d apart) - 2 E(one impurity). Accepts scalar or array d.
        :rtype: PairEnergy
        '''
        _check_distance(d)
        if modes is None:
            modes = ModesManager.effective_modes(p, drive)
        plus, minus = cls._branch_terms(p, modes, d)
        raman = 2.0 * cls._raman_overlap(p, drive, modes, d)
        delta_e = 2.0 * plus + 2.0 * minus + raman
        if np.ndim(delta_e) == 0:
            return PairEnergy(float(delta_e), float(raman), float(2.0 * plus), float(2.0 * minus))
        return PairEnergy(delta_e, raman, 2.0 * plus, 2.0 * minus)

    @classmethod
    def lattice_energy(cls, p, drive, rho):
        '''
        A0 sum n_m + sum_{m,l} n_m n_l [sum_k B_k P_k(d_ml) - hbar Omega sum_kl W_kl Q_kl(d_ml)]
        :rtype: LatticeEnergy
        '''
        if abs(rho.sigma - p.sigma) > 1e-12 * p.sigma:
            logger.warning("Impurity width %r m differs from params sigma %r m, using the density's",
                           rho.sigma, p.sigma)
        p = p.with_changes(sigma=rho.sigma)
        modes = ModesManager.effective_modes(p, drive)
        a0 = cls.coefficients(p, drive, modes).a0
        occupations = np.array(rho.occupations)
        if occupations.size == 0:
            return LatticeEnergy(0.0, np.zeros((0, 0)))
        separations = rho.separations()
        plus, minus = cls._branch_terms(p, modes, separations)
        kernel = plus + minus + cls._raman_overlap(p, drive, modes, separations)
        pairwise = np.outer(occupations, occupations) * kernel
        total = a0 * math.fsum(rho.occupations) + math.fsum(pairwise.ravel())
        return LatticeEnergy(total, pairwise)

    @classmethod
    def peak_magnitude(cls, p):
        '''|Delta E(Omega = 0, d = 0)|, the figure normalisation'''
        return abs(cls.pair_energy(p, RamanDrive.off(), 0.0).delta_e)

    @classmethod
    def pair_curve(cls, p, drive, distances):
        distances = np.asarray(distances, dtype=float)
        pair = cls.pair_energy(p, drive, distances)
        return EnergyCurve({'d': distances}, pair.delta_e,
                           {'branch_plus': pair.branch_plus, 'branch_minus': pair.branch_minus,
                            'raman_cross': pair.raman_cross}, CurveKind.VS_DISTANCE)

    @classmethod
    def omega_curve(cls, p, omegas, distance):
        rows = [cls.pair_energy(p, RamanDrive(omega), distance) for omega in omegas]
        return cls._curve_from_rows({'omega': np.asarray(omegas, dtype=float)}, rows, CurveKind.VS_OMEGA)

    @classmethod
    def surface(cls, p, distances, omegas):
        '''Long format surface, omega varies slowest'''
        distances = np.asarray(distances, dtype=float)
        columns = {'d': np.tile(distances, len(omegas)),
                   'omega': np.repeat(np.asarray(omegas, dtype=float), distances.size)}
        rows = [cls.pair_energy(p, RamanDrive(omega), distances) for omega in omegas]
        return EnergyCurve(columns, np.concatenate([row.delta_e for row in rows]),
                           {name: np.concatenate([getattr(row, name) for row in rows])
                            for name in ('branch_plus', 'branch_minus', 'raman_cross')},
                           CurveKind.SURFACE)

    @classmethod
    def _curve_from_rows(cls, abscissa, rows, kind):
        return EnergyCurve(abscissa, np.array([row.delta_e for row in rows]),
                           {name: np.array([getattr(row, name) for row in rows])
                            for name in ('branch_plus', 'branch_minus', 'raman_cross')}, kind)

    @classmethod
    def pair_slope(cls, p, drive, d, step=None):
        '''Central difference of Delta E at d'''
        step = 1e-3 * p.sigma if step is None else step
        lower = max(d - step, 0.0)
        upper = d + step
        pair = cls.pair_energy(p, drive, np.array([lower, upper])).delta_e
        return float((pair[1] - pair[0]) / (upper - lower))

    @classmethod
    def crossover_omega(cls, p, d_probe):
        '''
        Drive at which the slope of Delta E at d_probe changes sign, searched
        over [0, 10 Omega_lim]. A positive slope means attraction.
        :raises NoSignChangeException: when the slope keeps one sign
        '''
        if not 0 < d_probe <= MAX_PROBE_SPACINGS * p.lattice_a:
            raise InvalidDistanceException("d_probe must lie in (0, 5*lattice_a].")
        omega_lim = ModesManager.threshold_omega(p)

        def slope(omega):
            return cls.pair_slope(p, RamanDrive(omega), d_probe)

        omegas = np.linspace(0.0, CROSSOVER_BRACKET * omega_lim, CROSSOVER_SCAN_POINTS)
        slopes = [slope(omega) for omega in omegas]
        for index in range(len(omegas) - 1):
            if slopes[index] * slopes[index + 1] < 0:
                crossover = optimize.brentq(slope, omegas[index], omegas[index + 1], xtol=1e-9 * omega_lim)
                logger.info("Crossover at %r rad/s (%.4g Omega_lim), d_probe = %r m",
                            crossover, crossover / omega_lim, d_probe)
                return crossover
        raise NoSignChangeException("The slope of Delta E at d = " + repr(d_probe) + " m keeps one sign for "
                                    "omega in [0, " + repr(CROSSOVER_BRACKET) + " Omega_lim].")
