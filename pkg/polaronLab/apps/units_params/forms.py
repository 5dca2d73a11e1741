from django import forms

from . import units
from .constants import REFERENCE
from .exceptions import InvalidParamsException, ConfigException
from .models import MixtureParams, RamanDrive, DensityConvention
from .units import Quantity


class QuantityField(forms.CharField):
    '''Text field holding a number with an optional unit suffix, cleaned to SI'''

    def __init__(self, dimension, *args, **kwargs):
        kwargs.setdefault('required', False)
        super(QuantityField, self).__init__(*args, **kwargs)
        self.dimension = dimension

    def to_python(self, value):
        value = super(QuantityField, self).to_python(value)
        if value in self.empty_values:
            return None
        try:
            return Quantity.parse(value, self.dimension)
        except ConfigException as e:
            raise forms.ValidationError(str(e))


DRIVE_TRIPLE = ('omega1', 'omega2', 'detuning')


class MixtureParamsForm(forms.Form):
    m_b = QuantityField(units.MASS)
    m_a = QuantityField(units.MASS)
    n0_A = QuantityField(units.INVERSE_LENGTH)
    n0_B = QuantityField(units.INVERSE_LENGTH)
    g_AA = QuantityField(units.COUPLING)
    g_BB = QuantityField(units.COUPLING)
    g_AB = QuantityField(units.COUPLING)
    g_abA = QuantityField(units.COUPLING)
    g_abB = QuantityField(units.COUPLING)
    omega_perp = QuantityField(units.ANGULAR_FREQUENCY)
    omega_long = QuantityField(units.ANGULAR_FREQUENCY)
    lattice_a = QuantityField(units.LENGTH)
    sigma = QuantityField(units.LENGTH)
    density_convention = forms.ChoiceField(choices=DensityConvention.choices(), required=False)
    omega_rabi = QuantityField(units.ANGULAR_FREQUENCY)
    omega1 = QuantityField(units.ANGULAR_FREQUENCY)
    omega2 = QuantityField(units.ANGULAR_FREQUENCY)
    detuning = QuantityField(units.ANGULAR_FREQUENCY)

    PARAM_FIELDS = ('m_b', 'm_a', 'n0_A', 'n0_B', 'g_AA', 'g_BB', 'g_AB', 'g_abA', 'g_abB',
                    'omega_perp', 'omega_long', 'lattice_a', 'sigma', 'density_convention')

    @classmethod
    def accepted_keys(cls):
        return list(cls.base_fields)

    def clean(self):
        cleaned_data = super(MixtureParamsForm, self).clean()
        if self.errors:
            return cleaned_data
        values = {}
        for name in self.PARAM_FIELDS:
            value = cleaned_data.get(name)
            values[name] = REFERENCE[name] if value in (None, '') else value
        try:
            cleaned_data['params'] = MixtureParams(**values)
        except InvalidParamsException as e:
            raise forms.ValidationError(str(e))
        cleaned_data['drive'] = self._clean_drive(cleaned_data)
        return cleaned_data

    def _clean_drive(self, cleaned_data):
        triple = [cleaned_data.get(name) for name in DRIVE_TRIPLE]
        given = [value is not None for value in triple]
        omega_rabi = cleaned_data.get('omega_rabi')
        if any(given) and not all(given):
            raise forms.ValidationError("omega1, omega2 and detuning must be given together.")
        if all(given) and omega_rabi is not None:
            raise forms.ValidationError("Give either omega_rabi or the two photon triple, not both.")
        try:
            if all(given):
                return RamanDrive.by_two_photon(*triple)
            return RamanDrive(0.0 if omega_rabi is None else omega_rabi)
        except ConfigException as e:
            raise forms.ValidationError(str(e))

    @property
    def params(self):
        return self.cleaned_data['params']

    @property
    def drive(self):
        return self.cleaned_data['drive']

    def error_msg(self, reader=None):
        '''
        :param reader: ConfigFileReader used to name line numbers
        :return: one line per error
        '''
        lines = []
        for field, errors in self.errors.items():
            if reader is not None and field in reader.line_numbers:
                prefix = reader.location_of(field) + ": " + field + ": "
            elif reader is not None:
                prefix = reader.source + ": "
            else:
                prefix = field + ": "
            for error in errors:
                lines.append(prefix + error)
        return "\n".join(lines)
