from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from polaronLab.apps.exceptions import ConfigException, PhysicsException
from polaronLab.apps.units_params import units
from polaronLab.apps.units_params.models import RamanDrive
from polaronLab.apps.units_params.services import ParamsManager
from polaronLab.apps.units_params.units import Quantity
from polaronLab.helper_apps.specfun.exception import SpecfunException

EXIT_VERIFICATION = 1
EXIT_CONFIG = 2
EXIT_PHYSICS = 3
EXIT_IO = 4


def format_number(value):
    return format(float(value), '.12g')


class PolaronCommand(BaseCommand):
    '''
    Loads the configuration and maps library errors to the exit code contract:
    0 success, 1 verification failure, 2 config error, 3 physics error, 4 I/O error.
    '''
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('--config', default=settings.REFERENCE_CONFIG, help="key = value parameter file")
        parser.add_argument('--omega', default=None,
                            help="Raman coupling overriding the file, e.g. '500 Hz'")

    def handle(self, *args, **options):
        try:
            params, drive = ParamsManager.load_config(options['config'])
            if options.get('omega') is not None:
                drive = RamanDrive(Quantity.parse(options['omega'], units.ANGULAR_FREQUENCY))
            for warning in params.invariant_warnings():
                self.stderr.write("warning: " + warning)
            self.run(params, drive, **options)
        except ConfigException as e:
            raise CommandError(self._describe(e), returncode=EXIT_CONFIG)
        except (PhysicsException, SpecfunException) as e:
            raise CommandError(self._describe(e), returncode=EXIT_PHYSICS)
        except OSError as e:
            raise CommandError("I/O error: " + str(e), returncode=EXIT_IO)

    def _describe(self, exception):
        return type(exception).__name__ + ": " + str(exception)

    def run(self, params, drive, **options):
        raise NotImplementedError()

    def write_lines(self, lines):
        for line in lines:
            self.stdout.write(line)

    def parse_length(self, text):
        return Quantity.parse(text, units.LENGTH)

    def emit(self, exporter, frame, path):
        '''Writes the CSV to path, or to stdout without a path'''
        if path is None:
            self.stdout.write(exporter.render(frame), ending='')
            return
        exporter.write(frame, path)
        self.stderr.write("wrote " + str(len(frame)) + " rows to " + path)
