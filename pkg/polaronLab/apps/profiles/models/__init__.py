from .density import ImpurityDensity
from .profile import DeformationProfile
