from collections import namedtuple

import numpy as np


class EffectiveModes(namedtuple('EffectiveModes', ['eta_plus', 'eta_minus', 'k_plus', 'k_minus',
                                                   'mix_kplus', 'mix_kminus', 'transform', 'degenerate'])):
    '''
    Diagonal representation of the deformation equations. Column 0 of transform
    belongs to eta_plus (the larger inverse length), column 1 to eta_minus.
    Rows are the components A and B.
    '''
    __slots__ = ()

    @property
    def etas(self):
        return np.array([self.eta_plus, self.eta_minus])

    @property
    def amplitudes(self):
        return np.array([self.k_plus, self.k_minus])

    @property
    def widths(self):
        return 1.0 / self.etas

    @property
    def depths(self):
        '''|K/eta| per branch, the scale of the effective deformation at the impurity'''
        return np.abs(self.amplitudes / self.etas)

    def weights(self):
        '''
        W[k, l] = S[A, k] S[B, l] K[k] K[l], the mode weights of the overlap of theta_A and theta_B
        :rtype: numpy.ndarray
        '''
        return np.outer(self.transform[0] * self.amplitudes, self.transform[1] * self.amplitudes)

    def to_physical(self, theta_eff):
        '''
        :param theta_eff: array of shape (2, ...) with theta'_+ and theta'_-
        :return: array of shape (2, ...) with theta_A and theta_B
        '''
        return np.tensordot(self.transform, np.asarray(theta_eff), axes=1)

    def to_effective(self, theta):
        # the transform is orthonormal
        return np.tensordot(self.transform.T, np.asarray(theta), axes=1)


PrintedAmplitudes = namedtuple('PrintedAmplitudes', ['k_plus', 'k_minus', 'beta'])
