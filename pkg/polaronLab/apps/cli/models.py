from collections import namedtuple

import numpy as np

from polaronLab.apps.units_params.models import DjangoEnum
from polaronLab.apps.units_params.units import Quantity
from polaronLab.apps.units_params.exceptions import UnitException
from .exceptions import InvalidSweepException


class SweepVariable(DjangoEnum):
    DISTANCE = 'distance'
    OMEGA = 'omega'
    BOTH = 'both'


class SweepTable(DjangoEnum):
    PAIR = 'pair'
    SINGLE = 'single'
    MODES = 'modes'


class GridRange(namedtuple('GridRange', ['minimum', 'maximum', 'count', 'log'])):
    __slots__ = ()

    def __new__(cls, minimum, maximum, count, log=False):
        minimum, maximum, count = float(minimum), float(maximum), int(count)
        if count < 2:
            raise InvalidSweepException("A sweep grid needs at least 2 points.")
        if not minimum < maximum:
            raise InvalidSweepException("A sweep grid needs min < max.")
        if log and minimum <= 0:
            raise InvalidSweepException("Log spacing needs min > 0.")
        return super(GridRange, cls).__new__(cls, minimum, maximum, count, bool(log))

    @classmethod
    def by_text(cls, text, dimension=None):
        '''
        Parses "min,max,count[,log]". min and max take unit suffixes of the dimension,
        without a dimension they are plain numbers.
        '''
        parts = [part.strip() for part in str(text).split(',')]
        if len(parts) not in (3, 4) or (len(parts) == 4 and parts[3] not in ('log', 'lin')):
            raise InvalidSweepException("Expected 'min,max,count[,log]', got '" + str(text) + "'.")
        try:
            if dimension is None:
                bounds = [float(parts[0]), float(parts[1])]
            else:
                bounds = [Quantity.parse(parts[0], dimension), Quantity.parse(parts[1], dimension)]
            count = int(parts[2])
        except (ValueError, UnitException) as e:
            raise InvalidSweepException("Bad sweep grid '" + str(text) + "': " + str(e))
        return cls(bounds[0], bounds[1], count, len(parts) == 4 and parts[3] == 'log')

    def values(self):
        if self.log:
            return np.geomspace(self.minimum, self.maximum, self.count)
        return np.linspace(self.minimum, self.maximum, self.count)

    def scaled(self, factor):
        return GridRange(self.minimum * factor, self.maximum * factor, self.count, self.log)


class SweepSpec(namedtuple('SweepSpec', ['variable', 'ranges', 'output_path', 'normalize', 'table'])):
    '''
    ranges maps 'distance' and/or 'omega' to a GridRange, omega in rad/s
    '''
    __slots__ = ()

    def __new__(cls, variable, ranges, output_path=None, normalize=False, table=SweepTable.PAIR):
        variable = SweepVariable(variable)
        table = SweepTable(table)
        needed = {SweepVariable.DISTANCE: ['distance'], SweepVariable.OMEGA: ['omega'],
                  SweepVariable.BOTH: ['distance', 'omega']}[variable]
        for name in needed:
            if name not in ranges:
                raise InvalidSweepException("A " + variable.value + " sweep needs a " + name + " grid.")
        if table is not SweepTable.PAIR and variable is not SweepVariable.OMEGA:
            raise InvalidSweepException("The " + table.value + " table is swept over omega only.")
        return super(SweepSpec, cls).__new__(cls, variable, dict(ranges), output_path, bool(normalize),
                                             table)
