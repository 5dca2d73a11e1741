from .common import DjangoEnum, DensityConvention, Component
from .params import MixtureParams
from .drive import RamanDrive
