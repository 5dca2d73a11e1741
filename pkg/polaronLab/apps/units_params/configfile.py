from collections import OrderedDict

from .exceptions import ConfigSyntaxException, UnknownKeyException


class ConfigFileReader(object):
    '''
    Reads "key = value" lines. "#" starts a comment, blank lines are skipped.
    Keys are checked against the accepted names while reading, so the error
    names the offending line.
    '''

    def __init__(self, lines, accepted_keys, source='<config>'):
        self.source = source
        self.accepted_keys = frozenset(accepted_keys)
        self._lines = list(lines)
        self.entries = OrderedDict()
        self.line_numbers = {}
        self._parse()

    @classmethod
    def by_path(cls, path, accepted_keys):
        with open(path, 'r') as f:
            return cls(f.read().splitlines(), accepted_keys, source=str(path))

    @classmethod
    def by_text(cls, text, accepted_keys, source='<config>'):
        return cls(text.splitlines(), accepted_keys, source=source)

    def _location(self, line_number):
        return self.source + ":" + str(line_number)

    def _parse(self):
        for line_number, raw in enumerate(self._lines, 1):
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            key, separator, value = line.partition('=')
            key, value = key.strip(), value.strip()
            if not separator or not key:
                raise ConfigSyntaxException(self._location(line_number) + ": expected 'key = value', got '" +
                                            raw.strip() + "'.")
            if key not in self.accepted_keys:
                raise UnknownKeyException(self._location(line_number) + ": unknown key '" + key + "'.")
            if key in self.entries:
                raise ConfigSyntaxException(self._location(line_number) + ": '" + key +
                                            "' already set on line " + str(self.line_numbers[key]) + ".")
            if not value:
                raise ConfigSyntaxException(self._location(line_number) + ": '" + key + "' has no value.")
            self.entries[key] = value
            self.line_numbers[key] = line_number

    def location_of(self, key):
        if key in self.line_numbers:
            return self._location(self.line_numbers[key])
        return self.source
