from .matrix import CouplingMatrix
from .modes import EffectiveModes, PrintedAmplitudes
