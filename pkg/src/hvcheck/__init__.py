"""Exact-arithmetic computation and verification toolkit for the twisted
Heisenberg-Virasoro algebra and its polynomial, intermediate-series, twisted
and induced module families.

All scalars are arbitrary-precision rationals; every check is a property
verified exactly on a finite window, with counterexample witnesses on
failure and honest "inconclusive" outcomes where a finite window cannot
decide.
"""

__version__ = "0.1.0"

from .algebra import C, I, L, bracket, check_jacobi  # noqa: F401
from .modules import (act, act_elem, commutator_defect, invariance_check,  # noqa: F401
                      span_closure, tensor)
from .report import CheckReport  # noqa: F401
from .zoo import a_series, calm_a, calm_omega, gamma_twist, omega, one_dim_V  # noqa: F401
