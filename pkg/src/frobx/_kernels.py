"""Rational-arithmetic backend selection.

The row-reduction kernels spend essentially all their time in exact rational
arithmetic.  gmpy2's mpq (GMP-backed, compiled) is used when importable; the
stdlib Fraction is the pure-Python fallback.  Set FROBX_PURE_PYTHON=1 to force
the fallback (used by the benchmark for comparison).
"""

import os
from fractions import Fraction

if os.environ.get("FROBX_PURE_PYTHON") == "1":
    mpq = Fraction
    BACKEND = "fractions"
else:
    try:
        from gmpy2 import mpq

        BACKEND = "gmpy2"
    except ImportError:  # pragma: no cover
        mpq = Fraction
        BACKEND = "fractions"


def rational(num, den=1):
    """Exact rational from integers; always reduced with positive denominator."""
    return mpq(num, den)
