"""CurveSig: signature and nullity invariants of complex schemes of real plane curves"""

__version__ = "1.0.0"
__author__ = "Eric Martin"
