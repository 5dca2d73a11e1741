from polaronLab.apps.cli.command import PolaronCommand, format_number
from polaronLab.apps.energy.services import EnergyManager
from polaronLab.apps.units_params.units import Quantity


class Command(PolaronCommand):
    help = "Prints the energy of a single impurity"

    def run(self, params, drive, **options):
        energy = EnergyManager.single_impurity_energy(params, drive)
        coefficients = EnergyManager.coefficients(params, drive)
        self.write_lines([
            "omega_rabi  = " + Quantity.format_frequency(drive.omega_rabi),
            "A0          = " + format_number(coefficients.a0) + " J",
            "total       = " + format_number(energy.total) + " J",
            "binding     = " + format_number(energy.binding) + " J",
            "raman_cross = " + format_number(energy.raman_cross) + " J",
        ])
