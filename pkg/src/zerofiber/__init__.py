"""Exact computational algebra for quaternionic reflection-group numerology.

Everything here is exact: arbitrary-precision rationals and cyclotomic
integers end to end, no floating point.
"""

from .cyclotomic import Cyc, euler_phi

__all__ = ["Cyc", "euler_phi"]
