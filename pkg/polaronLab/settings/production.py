from .base import *

DEBUG = False

LOGGING['loggers']['polaronLab']['level'] = 'WARNING'

POLARON['SWEEP_WORKERS'] = os.cpu_count() or 1
