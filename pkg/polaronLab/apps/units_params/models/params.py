import logging
import math
from collections import namedtuple, OrderedDict

from scipy import constants

from ..exceptions import InvalidParamsException
from .common import DensityConvention, Component

logger = logging.getLogger(__name__)

ONE_D_VALIDITY_RATIO = 0.1

FIELDS = ['m_b', 'm_a', 'n0_A', 'n0_B', 'g_AA', 'g_BB', 'g_AB', 'g_abA', 'g_abB',
          'omega_perp', 'omega_long', 'lattice_a', 'sigma', 'density_convention']

STRICTLY_POSITIVE = ['m_b', 'm_a', 'n0_A', 'n0_B', 'g_AA', 'g_BB', 'omega_perp', 'omega_long',
                     'lattice_a', 'sigma']


class MixtureParams(namedtuple('MixtureParams', FIELDS)):
    '''
    Physical description of the impurity + two component condensate system.
    All values are SI, frequencies are angular.
    '''
    __slots__ = ()

    def __new__(cls, m_b, m_a, n0_A, n0_B, g_AA, g_BB, g_AB, g_abA, g_abB,
                omega_perp, omega_long, lattice_a, sigma,
                density_convention=DensityConvention.PER_COMPONENT):
        density_convention = DensityConvention(density_convention)
        values = [float(v) for v in (m_b, m_a, n0_A, n0_B, g_AA, g_BB, g_AB, g_abA, g_abB,
                                     omega_perp, omega_long, lattice_a, sigma)]
        self = super(MixtureParams, cls).__new__(cls, *(values + [density_convention]))
        self._validate()
        return self

    def _validate(self):
        for name in FIELDS[:-1]:
            if not math.isfinite(getattr(self, name)):
                raise InvalidParamsException(name + " must be finite.")
        for name in STRICTLY_POSITIVE:
            if getattr(self, name) <= 0:
                raise InvalidParamsException(name + " must be strictly positive, got " +
                                             repr(getattr(self, name)) + ".")
        if self.g_AB < 0:
            raise InvalidParamsException("g_AB must not be negative, got " + repr(self.g_AB) + ".")

    def with_changes(self, **changes):
        values = self._asdict()
        values.update(changes)
        return MixtureParams(**values)

    def is_close(self, other, rel_tol=1e-9):
        if self.density_convention is not other.density_convention:
            return False
        return all(math.isclose(getattr(self, name), getattr(other, name), rel_tol=rel_tol)
                   for name in FIELDS[:-1])

    def as_dict(self):
        values = OrderedDict(self._asdict())
        values['density_convention'] = self.density_convention.value
        return values

    @property
    def symbol_density(self):
        '''The density n of the closed forms, read per density_convention'''
        total = self.n0_A + self.n0_B
        if self.density_convention is DensityConvention.TOTAL:
            return total
        return total / 2.0

    @property
    def model_densities(self):
        '''
        Condensate densities entering the coupling matrix. They are the configured
        densities rescaled to sum to symbol_density.
        :rtype: tuple
        '''
        scale = self.symbol_density / (self.n0_A + self.n0_B)
        return self.n0_A * scale, self.n0_B * scale

    @property
    def equal_densities(self):
        return math.isclose(self.n0_A, self.n0_B, rel_tol=1e-12)

    def density(self, component):
        n_a, n_b = self.model_densities
        return n_a if Component(component) is Component.A else n_b

    def intra_coupling(self, component):
        return self.g_AA if Component(component) is Component.A else self.g_BB

    def impurity_coupling(self, component):
        return self.g_abA if Component(component) is Component.A else self.g_abB

    def invariant_warnings(self):
        '''
        Soft invariants: they are reported, never enforced.
        :return: list of messages
        '''
        messages = []
        transverse = constants.hbar * self.omega_perp
        for name in ('g_AA', 'g_BB', 'g_AB'):
            for density_name, density in (('n0_A', self.n0_A), ('n0_B', self.n0_B)):
                ratio = density * getattr(self, name) / transverse
                if ratio > ONE_D_VALIDITY_RATIO:
                    messages.append("1D condition: " + density_name + "*" + name + "/(hbar*omega_perp) = " +
                                    format(ratio, '.3g') + " exceeds " + str(ONE_D_VALIDITY_RATIO) + ".")
        if self.sigma >= self.lattice_a:
            messages.append("sigma = " + format(self.sigma, '.4g') + " m is not shorter than lattice_a = " +
                            format(self.lattice_a, '.4g') + " m.")
        for message in messages:
            logger.warning(message)
        return messages
