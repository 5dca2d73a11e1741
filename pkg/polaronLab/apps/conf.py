from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

DEFAULTS = {
    'GRID_POINTS': 2 ** 14,
    'GRID_MARGIN': 30.0,
    'DEGENERACY_TOLERANCE': 1e-6,
    'SWEEP_WORKERS': 4,
    'FD_RESIDUAL_TOLERANCE': 1e-8,
    'VERIFY_SEED': 20140613,
}


def polaron_setting(name):
    '''
    Reads a numerical default from settings.POLARON
    :param name: key of the POLARON settings dict
    :return: the configured value or the built-in default
    '''
    try:
        configured = getattr(settings, 'POLARON', {})
    except ImproperlyConfigured:
        configured = {}
    return configured.get(name, DEFAULTS[name])
