"""sesqui — exact base-6 symbolic dynamics of multiplication by 3/2.

A two-dimensional word over the digits {0,...,5} is *legal* when every row
is exactly 3/2 times the row above it, in the sense of columnwise base-6
arithmetic (multiply by 3, divide by 2, carries and all).  This package
enumerates the finite windows of the legal words, factors the resulting
production-pair sets into cartesian tables, builds the de Bruijn-structured
graphs and automata those tables induce, and runs bounded emptiness probes
for Z-number-style column constraints.

All arithmetic is exact (machine integers and `fractions.Fraction`); every
set-valued result is deterministically ordered.
"""

__version__ = "0.1.0"

from .words import Digit, Row, Shear, Window, dual, hjoin, vjoin
from .carry import CarryState, carry_step, recurrent_carry_states
from .windows import enumerate_windows, trapezoid_core, nondeadend

__all__ = [
    "__version__",
    "Digit",
    "Row",
    "Shear",
    "Window",
    "dual",
    "hjoin",
    "vjoin",
    "CarryState",
    "carry_step",
    "recurrent_carry_states",
    "enumerate_windows",
    "trapezoid_core",
    "nondeadend",
]
