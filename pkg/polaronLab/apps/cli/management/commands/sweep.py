from polaronLab.apps.cli.command import PolaronCommand
from polaronLab.apps.cli.export import CsvExporter
from polaronLab.apps.cli.models import SweepSpec, SweepVariable, SweepTable, GridRange
from polaronLab.apps.cli.sweep import SweepRunner
from polaronLab.apps.modes.services import ModesManager
from polaronLab.apps.units_params import units


class Command(PolaronCommand):
    help = "Sweeps the pair energy, the single impurity energy or the modes and writes a CSV table"

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument('--variable', choices=SweepVariable.values(),
                            default=SweepVariable.DISTANCE.value)
        parser.add_argument('--table', choices=SweepTable.values(), default=SweepTable.PAIR.value)
        parser.add_argument('--grid', default=None,
                            help="distance grid 'min,max,count[,log]', e.g. '0nm,2um,201'")
        parser.add_argument('--omega-grid', default=None, help="omega grid 'min,max,count[,log]'")
        parser.add_argument('--relative', action='store_true', help="omega grid in units of omega_lim")
        parser.add_argument('--distance', default=None, help="separation for omega sweeps of the pair table")
        parser.add_argument('--normalize', action='store_true')
        parser.add_argument('--workers', type=int, default=None)
        parser.add_argument('--out', default=None, help="CSV path, stdout when omitted")

    def run(self, params, drive, **options):
        ranges = {}
        if options['grid'] is not None:
            ranges['distance'] = GridRange.by_text(options['grid'], units.LENGTH)
        if options['omega_grid'] is not None:
            if options['relative']:
                ranges['omega'] = GridRange.by_text(options['omega_grid']).scaled(
                    ModesManager.threshold_omega(params))
            else:
                ranges['omega'] = GridRange.by_text(options['omega_grid'], units.ANGULAR_FREQUENCY)
        spec = SweepSpec(options['variable'], ranges, options['out'], options['normalize'], options['table'])
        distance = None if options['distance'] is None else self.parse_length(options['distance'])
        frame = SweepRunner(params, drive, spec, distance=distance, workers=options['workers']).run()
        exporter = CsvExporter('sweep ' + spec.variable.value + ' ' + spec.table.value, params, drive)
        self.emit(exporter, frame, spec.output_path)
