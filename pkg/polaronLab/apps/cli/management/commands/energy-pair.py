from django.core.management.base import CommandError

from polaronLab.apps.cli.command import PolaronCommand, format_number, EXIT_CONFIG
from polaronLab.apps.energy.services import EnergyManager
from polaronLab.apps.units_params.units import Quantity


class Command(PolaronCommand):
    help = "Prints the interaction energy of two impurities"

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument('--distance', default=None, help="separation, e.g. '532 nm'")
        parser.add_argument('--normalize', action='store_true',
                            help="also print Delta E divided by |Delta E(omega = 0, d = 0)|")

    def run(self, params, drive, **options):
        if options['distance'] is None:
            raise CommandError("energy-pair needs --distance.", returncode=EXIT_CONFIG)
        d = self.parse_length(options['distance'])
        pair = EnergyManager.pair_energy(params, drive, d)
        lines = [
            "omega_rabi    = " + Quantity.format_frequency(drive.omega_rabi),
            "d             = " + format_number(d) + " m",
            "delta_e_total = " + format_number(pair.delta_e) + " J",
            "branch_plus   = " + format_number(pair.branch_plus) + " J",
            "branch_minus  = " + format_number(pair.branch_minus) + " J",
            "raman_cross   = " + format_number(pair.raman_cross) + " J",
        ]
        if options['normalize']:
            normalized = pair.delta_e / EnergyManager.peak_magnitude(params)
            lines.append("normalized    = " + format_number(normalized))
        self.write_lines(lines)
