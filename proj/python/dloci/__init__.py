"""Exact Chern-class computations for Dirac degeneracy loci."""

from fractions import Fraction

from . import _core
from ._core import DlociError, dirac_index, run_cli, verify

__all__ = ["DlociError", "coefficients", "dirac_index", "dual_class", "run_cli", "series", "verify"]


def _value(c):
    # (num, den) for numbers, a list of (na_exp, ka_exp, num, den) for
    # polynomials in n_a and kappa; the latter becomes {(na_exp, ka_exp): Fraction}.
    if isinstance(c, tuple):
        return Fraction(int(c[0]), int(c[1]))
    return {(a, b): Fraction(int(n), int(d)) for a, b, n, d in c}


def coefficients(n_a=None, kappa=None, order=12, method="recursion"):
    """{(i, 2j, 2k): coefficient}; pass None to keep n_a or kappa symbolic."""
    return {(i, j, k): _value(c) for i, j, k, c in _core.coefficients(n_a, kappa, order, method)}


def series(which, order):
    """Coefficients of z^0, z^2, ... of J1, J2 or J3 (which = 1, 2, 3)."""
    return [_value(c) for c in _core.series(which, order)]


def dual_class(n_a, kappa=None):
    return {(i, j, k): _value(c) for i, j, k, c in _core.dual_class(n_a, kappa)}
