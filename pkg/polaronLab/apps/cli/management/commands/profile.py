from polaronLab.apps.cli.command import PolaronCommand
from polaronLab.apps.cli.export import CsvExporter
from polaronLab.apps.modes.services import ModesManager
from polaronLab.apps.profiles.models import ImpurityDensity
from polaronLab.apps.profiles.services import ProfileManager


class Command(PolaronCommand):
    help = "Writes the deformation profile of one impurity, or of a pair with --distance"

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument('--distance', default=None, help="separation of an impurity pair, e.g. '532 nm'")
        parser.add_argument('--points', type=int, default=None, help="grid points")
        parser.add_argument('--out', default=None, help="CSV path, stdout when omitted")

    def run(self, params, drive, **options):
        if options['distance'] is None:
            rho = ImpurityDensity.single(params.sigma)
        else:
            rho = ImpurityDensity.pair(params.sigma, self.parse_length(options['distance']))
        grid = None
        if options['points'] is not None:
            grid = ProfileManager.default_grid(ModesManager.effective_modes(params, drive), rho,
                                               points=options['points'])
        profile = ProfileManager.effective_deformations(params, drive, rho, grid=grid)
        exporter = CsvExporter('profile', params, drive,
                               extra=["impurity centres [m]: " + ", ".join(repr(c) for c in rho.centers)])
        self.emit(exporter, profile.as_frame(), options['out'])
