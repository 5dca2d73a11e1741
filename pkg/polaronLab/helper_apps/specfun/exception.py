class SpecfunException(Exception):
    '''Special function Base Exception'''


class ExpErfcOverflowException(SpecfunException):
    '''Raise when exp(a)*erfc(b) exceeds the double range'''
