from collections import namedtuple

SingleImpurityEnergy = namedtuple('SingleImpurityEnergy', ['total', 'binding', 'raman_cross'])

PairEnergy = namedtuple('PairEnergy', ['delta_e', 'raman_cross', 'branch_plus', 'branch_minus'])

LatticeEnergy = namedtuple('LatticeEnergy', ['total', 'pairwise_matrix'])
