from collections import namedtuple

EnergyCoefficients = namedtuple('EnergyCoefficients', ['a0', 'b_plus', 'b_minus', 'l_plus', 'l_minus',
                                                       'mix_kplus', 'mix_kminus'])

PrintedCoefficients = namedtuple('PrintedCoefficients', ['a0', 'b_a', 'b_b', 'k_plus', 'k_minus'])
