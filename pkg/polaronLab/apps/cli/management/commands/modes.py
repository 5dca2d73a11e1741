from polaronLab.apps.cli.command import PolaronCommand, format_number
from polaronLab.apps.modes.services import ModesManager
from polaronLab.apps.units_params.models import Component
from polaronLab.apps.units_params.units import Quantity, TWO_PI


class Command(PolaronCommand):
    help = "Prints the effective modes, the Raman threshold and the chemical potentials"

    def run(self, params, drive, **options):
        modes = ModesManager.effective_modes(params, drive)
        omega_lim = ModesManager.threshold_omega(params)
        plateau, collapse = ModesManager.width_asymptotics(params)
        mu = {c: ModesManager.chemical_potential(params, drive, c) for c in Component}
        n_a, n_b = params.model_densities
        self.write_lines([
            "omega_rabi       = " + Quantity.format_frequency(drive.omega_rabi),
            "model_n_A        = " + format_number(n_a) + " 1/m",
            "model_n_B        = " + format_number(n_b) + " 1/m",
            "eta_plus         = " + format_number(modes.eta_plus) + " 1/m",
            "eta_minus        = " + format_number(modes.eta_minus) + " 1/m",
            "width_plus       = " + format_number(modes.widths[0]) + " m",
            "width_minus      = " + format_number(modes.widths[1]) + " m",
            "K_plus           = " + format_number(modes.k_plus) + " m^-3/2",
            "K_minus          = " + format_number(modes.k_minus) + " m^-3/2",
            "degenerate       = " + str(modes.degenerate),
            "omega_lim        = " + format_number(omega_lim) + " rad/s (" +
            format_number(omega_lim / TWO_PI) + " Hz)",
            "mu_A             = " + format_number(mu[Component.A]) + " J",
            "mu_B             = " + format_number(mu[Component.B]) + " J",
            "width_minus_plateau = " + format_number(plateau) + " m",
            "width_plus_collapse = " + format_number(collapse) + " m*sqrt(rad/s)",
        ])
