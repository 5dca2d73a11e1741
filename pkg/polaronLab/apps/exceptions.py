class PolaronException(Exception):
    '''polaronLab Base Exception'''


class ConfigException(PolaronException):
    '''Raise when an input can't be parsed or violates a parameter invariant'''


class PhysicsException(PolaronException):
    '''Raise when valid inputs describe a system the model can't handle'''


class GridException(PhysicsException):
    '''Base for sampling grid problems'''


class GridTooCoarseException(GridException):
    '''Raise when the grid spacing does not resolve the shortest decay length'''


class GridTooNarrowException(GridException):
    '''Raise when the grid does not cover the deformation tails'''
