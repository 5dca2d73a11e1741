from collections import namedtuple, OrderedDict

import numpy as np
import pandas as pd

COLUMNS = ['x', 'theta_eff_plus', 'theta_eff_minus', 'theta_A', 'theta_B']


class DeformationProfile(namedtuple('DeformationProfile', ['grid', 'theta_eff_plus', 'theta_eff_minus',
                                                           'theta_A', 'theta_B', 'modes'])):
    __slots__ = ()

    @property
    def h(self):
        return float(self.grid[1] - self.grid[0])

    @property
    def theta(self):
        return np.vstack([self.theta_A, self.theta_B])

    @property
    def theta_eff(self):
        return np.vstack([self.theta_eff_plus, self.theta_eff_minus])

    def flipped(self):
        '''Same profile with the opposite global sign'''
        return self._replace(theta_eff_plus=-self.theta_eff_plus, theta_eff_minus=-self.theta_eff_minus,
                             theta_A=-self.theta_A, theta_B=-self.theta_B)

    def as_frame(self):
        return pd.DataFrame(OrderedDict(zip(COLUMNS, [self.grid, self.theta_eff_plus, self.theta_eff_minus,
                                                      self.theta_A, self.theta_B])))
