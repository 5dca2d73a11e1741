from collections import namedtuple, OrderedDict

import numpy as np
import pandas as pd

from polaronLab.apps.units_params.models import DjangoEnum


class CurveKind(DjangoEnum):
    VS_DISTANCE = 'vs_distance'
    VS_OMEGA = 'vs_omega'
    SURFACE = 'surface'


class EnergyCurve(namedtuple('EnergyCurve', ['abscissa', 'delta_e', 'components', 'kind'])):
    '''
    abscissa maps column names ('d', 'omega') to arrays of equal length,
    components holds branch_plus, branch_minus and raman_cross
    '''
    __slots__ = ()

    def normalized(self, peak):
        '''delta_e divided by |peak|'''
        return np.asarray(self.delta_e) / abs(peak)

    def as_frame(self, peak=None):
        columns = OrderedDict(self.abscissa)
        columns['delta_e_total'] = self.delta_e
        for name in ('branch_plus', 'branch_minus', 'raman_cross'):
            columns[name] = self.components[name]
        if peak is not None:
            columns['normalized'] = self.normalized(peak)
        return pd.DataFrame(columns)
