from .coefficients import EnergyCoefficients, PrintedCoefficients
from .results import SingleImpurityEnergy, PairEnergy, LatticeEnergy
from .curve import EnergyCurve, CurveKind
