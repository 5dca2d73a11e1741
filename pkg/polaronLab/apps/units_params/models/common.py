from enum import Enum


class DjangoEnum(Enum):
    @classmethod
    def choices(cls):
        return [(x.value, x.name) for x in cls]

    @classmethod
    def values(cls):
        return [x.value for x in cls]


class DensityConvention(DjangoEnum):
    TOTAL = 'total'
    PER_COMPONENT = 'per_component'


class Component(DjangoEnum):
    A = 'A'
    B = 'B'

    @property
    def other(self):
        if self is Component.A:
            return Component.B
        return Component.A
