from polaronLab.apps.exceptions import PhysicsException


class OracleException(PhysicsException):
    '''Oracle Base Exception'''


class SingularSystemException(OracleException):
    '''Raise when the finite difference system can't be solved to tolerance'''


class QuadratureNonConvergenceException(OracleException):
    '''Raise when adaptive quadrature misses its tolerance'''
