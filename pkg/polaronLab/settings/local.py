from .base import *


DEBUG = True

LOGGING['handlers']['console']['formatter'] = 'verbose'
LOGGING['loggers']['polaronLab']['level'] = os.environ.get('POLARON_LOG_LEVEL', 'DEBUG')
