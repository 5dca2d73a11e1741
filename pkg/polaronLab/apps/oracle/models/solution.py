from collections import namedtuple

import numpy as np

FdSolution = namedtuple('FdSolution', ['grid', 'theta_A', 'theta_B', 'h', 'residual_norm'])


def boundary_ratio(solution):
    '''
    Largest |theta| next to the Dirichlet boundaries relative to the peak
    '''
    theta = np.vstack([solution.theta_A, solution.theta_B])
    peak = np.max(np.abs(theta))
    if peak == 0:
        return 0.0
    return float(max(np.max(np.abs(theta[:, 1])), np.max(np.abs(theta[:, -2]))) / peak)
