from scipy import constants

RB87_MASS = 86.909180527 * constants.atomic_mass
K41_MASS = 40.96182576 * constants.atomic_mass

OLSHANII_CONSTANT = 1.0326

REFERENCE = {
    'm_b': RB87_MASS,
    'm_a': K41_MASS,
    'n0_A': 3e6,
    'n0_B': 3e6,
    'g_AA': 2.08e-37,
    'g_BB': 1.99e-37,
    'g_AB': 2.03e-37,
    'g_abA': 2.08e-35,
    'g_abB': 2.08e-35,
    'omega_perp': 2 * constants.pi * 34e3,
    'omega_long': 2 * constants.pi * 18e3,
    'lattice_a': 532e-9,
    'sigma': 200e-9,
    'density_convention': 'per_component',
}
