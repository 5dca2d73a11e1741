import logging
from collections import OrderedDict
from concurrent.futures import ThreadPoolExecutor

import pandas as pd

from polaronLab.apps.conf import polaron_setting
from polaronLab.apps.energy.services import EnergyManager
from polaronLab.apps.modes.services import ModesManager
from polaronLab.apps.units_params.models import RamanDrive
from .models import SweepVariable, SweepTable

logger = logging.getLogger(__name__)

PAIR_COLUMNS = ['delta_e_total', 'branch_plus', 'branch_minus', 'raman_cross']
SINGLE_COLUMNS = ['total', 'binding', 'raman_cross']
MODES_COLUMNS = ['width_plus', 'width_minus', 'depth_plus', 'depth_minus']


class SweepRunner(object):
    '''
    Evaluates a SweepSpec point by point on a thread pool. Every point is computed
    on its own, so the table does not depend on the number of workers.
    '''

    def __init__(self, params, drive, spec, distance=None, workers=None):
        self.params = params
        self.drive = drive
        self.spec = spec
        self.distance = params.lattice_a if distance is None else distance
        self.workers = polaron_setting('SWEEP_WORKERS') if workers is None else int(workers)

    def _map(self, function, items):
        items = list(items)
        if self.workers <= 1:
            return [function(item) for item in items]
        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            return list(executor.map(function, items))

    def _omegas(self):
        return self.spec.ranges['omega'].values()

    def _distances(self):
        return self.spec.ranges['distance'].values()

    def run(self):
        '''
        :rtype: pandas.DataFrame
        '''
        logger.debug("Sweep over %s (%s table) with %d worker(s)", self.spec.variable.value,
                     self.spec.table.value, self.workers)
        if self.spec.variable is SweepVariable.DISTANCE:
            return self._pair_table(self._distances(), [self.drive.omega_rabi], with_omega=False)
        if self.spec.variable is SweepVariable.BOTH:
            return self._pair_table(self._distances(), self._omegas(), with_omega=True)
        if self.spec.table is SweepTable.SINGLE:
            return self._single_table(self._omegas())
        if self.spec.table is SweepTable.MODES:
            return self._modes_table(self._omegas())
        return self._pair_table([self.distance], self._omegas(), with_omega=True, with_distance=False)

    def _omega_columns(self, omegas):
        omega_lim = ModesManager.threshold_omega(self.params)
        return OrderedDict([('omega', [float(omega) for omega in omegas]),
                            ('omega_over_lim', [float(omega) / omega_lim for omega in omegas])])

    def _pair_table(self, distances, omegas, with_omega, with_distance=True):
        modes = self._map(lambda omega: ModesManager.effective_modes(self.params, RamanDrive(omega)), omegas)
        points = [(index, float(d)) for index in range(len(omegas)) for d in distances]

        def evaluate(point):
            index, d = point
            return EnergyManager.pair_energy(self.params, RamanDrive(omegas[index]), d, modes=modes[index])

        rows = self._map(evaluate, points)
        columns = OrderedDict()
        if with_distance:
            columns['d'] = [d for _, d in points]
        if with_omega:
            for name, values in self._omega_columns([omegas[index] for index, _ in points]).items():
                columns[name] = values
        columns['delta_e_total'] = [row.delta_e for row in rows]
        for name in PAIR_COLUMNS[1:]:
            columns[name] = [getattr(row, name) for row in rows]
        if self.spec.normalize:
            peak = EnergyManager.peak_magnitude(self.params)
            columns['normalized'] = [row.delta_e / peak for row in rows]
        return pd.DataFrame(columns)

    def _single_table(self, omegas):
        rows = self._map(lambda omega: EnergyManager.single_impurity_energy(self.params, RamanDrive(omega)),
                         omegas)
        columns = self._omega_columns(omegas)
        for name in SINGLE_COLUMNS:
            columns[name] = [getattr(row, name) for row in rows]
        if self.spec.normalize:
            reference = abs(EnergyManager.single_impurity_energy(self.params, RamanDrive.off()).binding)
            columns['normalized'] = [row.binding / reference for row in rows]
        return pd.DataFrame(columns)

    def _modes_table(self, omegas):
        rows = ModesManager.width_curve(self.params, omegas)
        columns = self._omega_columns(omegas)
        columns['width_plus'] = [float(row.widths[0]) for row in rows]
        columns['width_minus'] = [float(row.widths[1]) for row in rows]
        columns['depth_plus'] = [float(row.depths[0]) for row in rows]
        columns['depth_minus'] = [float(row.depths[1]) for row in rows]
        if self.spec.normalize:
            reference = ModesManager.effective_modes(self.params, RamanDrive.off())
            scales = list(reference.widths) + list(reference.depths)
            for name, scale in zip(MODES_COLUMNS, scales):
                columns[name + '_normalized'] = [value / float(scale) for value in columns[name]]
        return pd.DataFrame(columns)
