import os

from polaronLab.apps.conf import DEFAULTS as POLARON_DEFAULTS

BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

# Command line project, there is no web surface and no database.
ALLOWED_HOSTS = []

SECRET_KEY = os.environ.get('POLARON_SECRET_KEY', 'polaronlab-has-no-sessions')

INSTALLED_APPS = [
    'polaronLab.apps',
    'polaronLab.helper_apps.specfun',
    'polaronLab.apps.units_params',
    'polaronLab.apps.modes',
    'polaronLab.apps.profiles',
    'polaronLab.apps.energy',
    'polaronLab.apps.oracle',
    'polaronLab.apps.cli',
]

DATABASES = {}

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

FIXTURE_DIRS = (
    os.path.join(BASE_DIR, 'fixtures'),
)

REFERENCE_CONFIG = os.path.join(BASE_DIR, 'fixtures', 'reference.cfg')

POLARON = dict(POLARON_DEFAULTS)

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
        },
        'simple': {
            'format': '%(levelname)s %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
    },
    'loggers': {
        'polaronLab': {
            'handlers': ['console'],
            'level': 'INFO',
            'propagate': False,
        },
    },
}
