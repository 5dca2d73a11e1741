import io

UNITS = {
    'x': 'm', 'theta_eff_plus': 'm^-1/2', 'theta_eff_minus': 'm^-1/2',
    'theta_A': 'm^-1/2', 'theta_B': 'm^-1/2',
    'd': 'm', 'omega': 'rad/s', 'omega_over_lim': '1', 'delta_e_total': 'J', 'branch_plus': 'J',
    'branch_minus': 'J', 'raman_cross': 'J', 'normalized': '1', 'total': 'J', 'binding': 'J',
    'width_plus': 'm', 'width_minus': 'm', 'depth_plus': 'm^1/2', 'depth_minus': 'm^1/2',
    'width_plus_normalized': '1', 'width_minus_normalized': '1', 'depth_plus_normalized': '1',
    'depth_minus_normalized': '1',
}


class CsvExporter(object):
    '''
    CSV with '#' header comments carrying units and the resolved configuration.
    Floats are written in their shortest round trip form.
    '''

    def __init__(self, title, params, drive, extra=None):
        self.title = title
        self.params = params
        self.drive = drive
        self.extra = extra or []

    def header(self, frame):
        lines = ["# polaronLab " + self.title]
        lines.append("# units: " + ", ".join(column + " [" + UNITS.get(column, '?') + "]"
                                             for column in frame.columns))
        for key, value in self.params.as_dict().items():
            text = repr(value) if isinstance(value, float) else str(value)
            lines.append("# config: " + key + " = " + text)
        lines.append("# config: omega_rabi = " + repr(self.drive.omega_rabi))
        n_a, n_b = self.params.model_densities
        lines.append("# model densities [1/m]: n_A = " + repr(n_a) + ", n_B = " + repr(n_b))
        for line in self.extra:
            lines.append("# " + line)
        return "\n".join(lines) + "\n"

    def render(self, frame):
        buffer = io.StringIO()
        buffer.write(self.header(frame))
        frame.to_csv(buffer, index=False, lineterminator='\n')
        return buffer.getvalue()

    def write(self, frame, path):
        text = self.render(frame)
        with open(path, 'w', newline='') as f:
            f.write(text)
        return text
