"""Gauss sums and central charges.

The additive central charge lives in Q/8Z and is handled exactly with
``Fraction``; only the Gauss sum itself is evaluated in floating point, where
recognising an 8th root of unity needs nothing more than double precision.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .errors import InternalInconsistencyError, PreconditionError
from .qform import PreMetricGroup, is_nondegenerate

GAUSS_TOL = 1e-9
ROOT_TOL = 1e-6


@dataclass(frozen=True, order=True)
class CentralCharge:
    """An element of Q/8Z, stored as its residue in [0, 8)."""

    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value) % 8)

    def __add__(self, other):
        if isinstance(other, CentralCharge):
            return CentralCharge(self.value + other.value)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, CentralCharge):
            return CentralCharge(self.value - other.value)
        return NotImplemented

    def __neg__(self):
        return CentralCharge(-self.value)

    def __mul__(self, n):
        if isinstance(n, int):
            return CentralCharge(n * self.value)
        return NotImplemented

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.value == 0

    def additive_order(self) -> int:
        """Order of the class in Q/8Z (always finite: the value is rational)."""
        v = self.value
        return (8 * v.denominator) // math.gcd(8 * v.denominator, v.numerator) if v else 1

    def __str__(self):
        return str(self.value)


def charge_from_rational(r) -> CentralCharge:
    return CentralCharge(Fraction(r))


def charge_add(c1: CentralCharge, c2: CentralCharge) -> CentralCharge:
    return c1 + c2


def charge_scale(n: int, c: CentralCharge) -> CentralCharge:
    return CentralCharge(n * c.value)


def charge_neg(c: CentralCharge) -> CentralCharge:
    return -c


ZERO = CentralCharge(Fraction(0))


def gauss_sum(pm: PreMetricGroup) -> complex:
    """``sum_a exp(2 pi i q(a))`` in double precision."""
    return kernels.gauss_sum(pm.qnum, pm.den)


def multiplicative_charge(pm: PreMetricGroup) -> complex:
    xi = gauss_sum(pm) / math.sqrt(pm.order)
    if abs(abs(xi) - 1.0) > ROOT_TOL:
        raise PreconditionError(
            f"|Gauss sum|/sqrt|A| = {abs(xi):.9f} != 1; the form {pm.describe()} is degenerate")
    return xi


def additive_charge(pm: PreMetricGroup) -> CentralCharge:
    """Integer c mod 8 with xi = exp(2 pi i c / 8)."""
    if not is_nondegenerate(pm):
        raise PreconditionError(f"central charge needs a non-degenerate form; got {pm.describe()}")
    xi = multiplicative_charge(pm)
    for c in range(8):
        if abs(xi - cmath.exp(2j * math.pi * c / 8)) < ROOT_TOL:
            return CentralCharge(Fraction(c))
    raise InternalInconsistencyError(f"xi = {xi} of {pm.describe()} is not an 8th root of unity")


_ROOT_NAMES = {
    0: "1",
    1: "(1+i)/sqrt2",
    2: "i",
    3: "(-1+i)/sqrt2",
    4: "-1",
    5: "(-1-i)/sqrt2",
    6: "-i",
    7: "(1-i)/sqrt2",
}


def root_of_unity_name(c: CentralCharge) -> str:
    """Symbolic name of exp(2 pi i c/8) for integer c."""
    if c.value.denominator != 1:
        raise ValueError("only integer charges have a closed-form name here")
    return _ROOT_NAMES[int(c.value)]


def format_complex(z: complex) -> str:
    re = 0.0 if abs(z.real) < 5e-10 else z.real
    im = 0.0 if abs(z.imag) < 5e-10 else z.imag
    return f"{re:.9f}{im:+.9f}i"
