import logging
import math

import numpy as np
from scipy import constants

from polaronLab.apps.conf import polaron_setting
from polaronLab.apps.units_params.models import Component, RamanDrive
from .exceptions import DynamicalInstabilityException, ZeroInterComponentCouplingException, \
    UnequalDensitiesException
from .models import CouplingMatrix, EffectiveModes, PrintedAmplitudes

logger = logging.getLogger(__name__)

HBAR = constants.hbar


def _kinetic_factor(p):
    return 2.0 * p.m_b / HBAR ** 2


def _orient(transform):
    '''Unit norm columns, first nonzero entry of each column positive'''
    transform = transform / np.linalg.norm(transform, axis=0)
    for column in range(transform.shape[1]):
        vector = transform[:, column]
        leading = vector[np.abs(vector) > 1e-14][0]
        if leading < 0:
            transform[:, column] = -vector
    return transform


def _mixing_constant(column):
    if column[1] == 0:
        return math.copysign(math.inf, column[0])
    return column[0] / column[1]


class ModesManager(object):
    @classmethod
    def coupling_matrix(cls, p, drive):
        '''
        Coefficients of theta'' - M theta = gamma rho. General densities are allowed.
        :rtype: CouplingMatrix
        '''
        factor = _kinetic_factor(p)
        n_a, n_b = p.model_densities
        half_raman = HBAR * drive.omega_rabi / 2.0
        m_aa = factor * (4.0 * p.g_AA * n_a + half_raman * math.sqrt(n_b / n_a))
        m_bb = factor * (4.0 * p.g_BB * n_b + half_raman * math.sqrt(n_a / n_b))
        m_ab = factor * (2.0 * p.g_AB * math.sqrt(n_a * n_b) - half_raman)
        return CouplingMatrix(m_aa, m_ab, m_ab, m_bb,
                              factor * p.g_abA * math.sqrt(n_a), factor * p.g_abB * math.sqrt(n_b))

    @classmethod
    def _check_equal_densities(cls, p):
        if not p.equal_densities:
            raise UnequalDensitiesException("Closed forms need n0_A == n0_B, got " + repr(p.n0_A) + " and " +
                                            repr(p.n0_B) + ".")

    @classmethod
    def closed_form_eigenvalues(cls, p, drive):
        '''
        eta_+^2 and eta_-^2 for equal densities, valid for any drive
        :rtype: tuple
        '''
        cls._check_equal_densities(p)
        n = p.symbol_density
        half_raman = HBAR * drive.omega_rabi / 2.0
        root = math.hypot((p.g_AA - p.g_BB) * n, half_raman - p.g_AB * n)
        common = (p.g_AA + p.g_BB) * n + half_raman
        factor = _kinetic_factor(p)
        return factor * (common + root), factor * (common - root)

    @classmethod
    def effective_modes(cls, p, drive):
        '''
        Diagonalises the coupling matrix. The inverse lengths come from the closed form,
        the mode matrix from the symmetric eigensolver.
        :rtype: EffectiveModes
        :raises DynamicalInstabilityException: for a phase separating or unstable mixture
        '''
        lambda_plus, lambda_minus = cls.closed_form_eigenvalues(p, drive)
        if lambda_minus <= 0:
            raise DynamicalInstabilityException("Coupling matrix eigenvalue " + repr(lambda_minus) +
                                                " 1/m^2 is not positive, the mixture is unstable.")
        coupling = cls.coupling_matrix(p, drive)
        _, vectors = np.linalg.eigh(coupling.matrix)
        transform = _orient(vectors[:, ::-1].copy())
        transform.setflags(write=False)
        eta_plus, eta_minus = math.sqrt(lambda_plus), math.sqrt(lambda_minus)
        amplitudes = -transform.T.dot(coupling.gamma)
        degenerate = (eta_plus - eta_minus) <= polaron_setting('DEGENERACY_TOLERANCE') * eta_plus
        if degenerate:
            logger.debug("Degenerate modes at omega = %r rad/s", drive.omega_rabi)
        return EffectiveModes(eta_plus, eta_minus, float(amplitudes[0]), float(amplitudes[1]),
                              _mixing_constant(transform[:, 0]), _mixing_constant(transform[:, 1]),
                              transform, bool(degenerate))

    @classmethod
    def width_curve(cls, p, omegas):
        '''
        :param omegas: iterable of drive strengths (rad/s)
        :return: list of EffectiveModes in the order of omegas
        '''
        return [cls.effective_modes(p, RamanDrive(omega)) for omega in omegas]

    @classmethod
    def threshold_omega(cls, p):
        '''
        Drive strength above which one width saturates and the other collapses.
        Reads only condensate parameters.
        :return: angular frequency (rad/s)
        '''
        if p.g_AB == 0:
            raise ZeroInterComponentCouplingException("The Raman threshold needs g_AB > 0.")
        n = p.symbol_density
        return n * ((p.g_AA - p.g_BB) ** 2 + p.g_AB ** 2) / (p.g_AB * HBAR)

    @classmethod
    def width_asymptotics(cls, p):
        '''
        Strong drive limits
        :return: (plateau width of the minus branch in m,
                  collapse scale in m*sqrt(rad/s), plus width ~ scale/sqrt(omega))
        '''
        plateau = math.sqrt((HBAR ** 2 / (2.0 * p.m_b)) / ((p.g_AA + p.g_BB + p.g_AB) * p.symbol_density))
        return plateau, math.sqrt(HBAR / (2.0 * p.m_b))

    @classmethod
    def chemical_potential(cls, p, drive, component):
        component = Component(component)
        other = component.other
        n_i, n_j = p.density(component), p.density(other)
        return (2.0 * p.intra_coupling(component) * n_i + p.g_AB * n_j -
                HBAR * drive.omega_rabi / 2.0 * math.sqrt(n_j / n_i))

    @classmethod
    def printed_amplitudes(cls, p, drive, modes=None):
        '''
        Amplitudes in their published closed forms, kept for comparison only.
        The zero drive form uses (k, 1) mode columns. The driven form carries an extra
        1/(4 eta) and is evaluated with the density factors of the beta terms restored.
        :rtype: PrintedAmplitudes
        '''
        cls._check_equal_densities(p)
        n = p.symbol_density
        prefactor = p.m_b / HBAR ** 2 * math.sqrt(n / 2.0)
        split = p.g_AA - p.g_BB
        beta0 = math.hypot(split, p.g_AB)
        if not drive.is_on:
            k_plus = prefactor * (p.g_abA * p.g_AB - p.g_abB * (split + beta0)) / beta0
            k_minus = -prefactor * (p.g_abA * p.g_AB + p.g_abB * (split + beta0)) / beta0
            return PrintedAmplitudes(k_plus, k_minus, beta0)
        if modes is None:
            modes = cls.effective_modes(p, drive)
        h_omega = HBAR * drive.omega_rabi
        beta = math.sqrt(4.0 * beta0 ** 2 * n ** 2 - 4.0 * p.g_AB * n * h_omega + h_omega ** 2)
        shared = p.g_abA * (h_omega - 2.0 * p.g_AB * n)
        k_plus = prefactor / (4.0 * modes.eta_plus) * (shared - p.g_abB * (2.0 * split * n + beta)) / beta
        k_minus = -prefactor / (4.0 * modes.eta_minus) * (shared + p.g_abB * (2.0 * split * n + beta)) / beta
        return PrintedAmplitudes(k_plus, k_minus, beta)
