from collections import namedtuple

import numpy as np


class CouplingMatrix(namedtuple('CouplingMatrix', ['m_AA', 'm_AB', 'm_BA', 'm_BB', 'gamma_A', 'gamma_B'])):
    '''Entries in 1/m^2, sources in m^-3/2'''
    __slots__ = ()

    @property
    def matrix(self):
        return np.array([[self.m_AA, self.m_AB], [self.m_BA, self.m_BB]])

    @property
    def gamma(self):
        return np.array([self.gamma_A, self.gamma_B])

    @property
    def is_symmetric(self):
        return self.m_AB == self.m_BA

    def eigenvalues(self):
        '''
        :return: eigenvalues in descending order
        :rtype: numpy.ndarray
        '''
        return np.linalg.eigvalsh(self.matrix)[::-1]
