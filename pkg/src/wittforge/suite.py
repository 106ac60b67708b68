"""Checkable consequences of the sl(2) relations in the Witt group.

Every relation is tested through the central charge in Q/8Z (a necessary
condition). Where the classes involved are pointed, the honest Witt order is
also computed.
"""
from __future__ import annotations

from fractions import Fraction

from . import witt
from .affine import (
    LevelledAlgebra,
    central_charge,
    parse_relation,
    plus_sector_charge,
    relation_charge,
)
from .charge import CentralCharge, additive_charge
from .fusionring import etale_dimension_ledger, fibonacci, subring, verlinde_sl2
from .qform import cyclic
from .report import VerificationReport

A1 = lambda k: LevelledAlgebra("A", 1, k)  # noqa: E731


def _check(report, sid, ok, detail, key):
    report.add(sid, "OK" if ok else "FAIL", detail, key if isinstance(key, tuple) else (key,))


def _relation(report, sid, text, key, note=""):
    c = relation_charge(parse_relation(text))
    _check(report, sid, c.is_zero(), f"{text}: charge {c} mod 8{note}", key)


def sl2_suite(odd_levels=range(1, 16, 2)) -> VerificationReport:
    r = VerificationReport(title="sl(2) relations")

    # (1) level 1 is the pointed class (Z/2, 1/4), of order 8
    z2 = cyclic(2, Fraction(1, 4))
    c1 = CentralCharge(central_charge(A1(1)))
    _check(r, "item1:charge", c1 == additive_charge(z2) == CentralCharge(1),
           f"c(A1:1) = {c1}, c(Z/2, 1/4) = {additive_charge(z2)}", 1)
    o = witt.order(witt.witt_class(z2))
    _check(r, "item1:order", o == 8 and 8 % c1.additive_order() == 0,
           f"Witt order {o}, charge order {c1.additive_order()}", 1)

    # (2) odd levels: twice the class is non-trivial
    for k in odd_levels:
        c = CentralCharge(central_charge(A1(k)))
        _check(r, f"item2:k={k}", not (2 * c).is_zero(),
               f"2 c(A1:{k}) = {2 * c}; charge order {c.additive_order()} (lower bound on the Witt order)", (2, k))

    # (3) level 2 squared is pointed: (Z/4, 3/8), order 8 in the Witt group
    z4 = cyclic(4, Fraction(3, 8))
    c2 = CentralCharge(central_charge(A1(2)))
    _check(r, "item3:charge", 2 * c2 == additive_charge(z4) == CentralCharge(3),
           f"2 c(A1:2) = {2 * c2}, c(Z/4, 3/8) = {additive_charge(z4)}", 3)
    o = witt.order(witt.witt_class(z4))
    _check(r, "item3:order", o == 8 and 16 % c2.additive_order() == 0,
           f"pointed order {o}, so A1:2 has order dividing 16; charge order {c2.additive_order()}", 3)

    # (4) level 4 equals sl(3) level 1, the pointed (Z/3, l^2/3)
    z3 = cyclic(3, Fraction(1, 3))
    _relation(r, "item4:embedding", "A1:4 * A2:1^-1", 4)
    c4 = CentralCharge(central_charge(A1(4)))
    o = witt.order(witt.witt_class(z3))
    _check(r, "item4:pointed", c4 == additive_charge(z3) and o == 4,
           f"c(A1:4) = {c4}, c(Z/3, l^2/3) = {additive_charge(z3)}, Witt order {o}", 4)

    # (5) level 6
    _relation(r, "item5:embedding", "A1:6^2 * so(9):1^-1", 5)
    _relation(r, "item5:level2", "A1:6^2 * A1:2^-3", 5)
    c6 = CentralCharge(central_charge(A1(6)))
    _check(r, "item5:order", 32 % c6.additive_order() == 0,
           f"charge order {c6.additive_order()} divides 32", 5)

    # (6) level 8 against the plus sector at level 3
    _relation(r, "item6:relation", "A1:8 * sl2plus:3^2", 6)
    dim_c = verlinde_sl2(8).fp.total
    dim_a = 1 + verlinde_sl2(8).fp.dims[8]
    _, local, lagrangian = etale_dimension_ledger(dim_c, dim_a)
    fib = fibonacci().fp.total
    _check(r, "item6:dimensions", abs(dim_a - 2) < 1e-9 and abs(local - fib * fib) < 1e-9 and not lagrangian,
           f"FPdim(A) = {dim_a:.9f}, FPdim C_A^0 = {local:.9f} = FPdim(Fib)^2", 6)
    even = subring(verlinde_sl2(3), [0, 2])
    _check(r, "item6:plus-sector", abs(even.fp.total - fib) < 1e-9,
           f"even part of sl2:3 has total {even.fp.total:.9f}", 6)

    # (7) level 10
    _relation(r, "item7:embedding", "A1:10 * sp(4):1^-1", 7)
    _relation(r, "item7:level2", "A1:10 * A1:2^-7", 7)

    # (8) level 28
    _relation(r, "item8:embedding", "A1:28 * G2:1^-1", 8)
    _relation(r, "item8:plus-sector", "A1:28 * sl2plus:3^-1", 8)
    c28 = central_charge(A1(28))
    _check(r, "item8:value", CentralCharge(c28) == plus_sector_charge(3) == CentralCharge(Fraction(14, 5)),
           f"c(A1:28) = {c28}", 8)

    # (9) level 12: the charge alone gives a lower bound on the order
    c12 = CentralCharge(central_charge(A1(12)))
    r.add("item9:level12", "OK", f"c(A1:12) = {c12}; charge order {c12.additive_order()} (lower bound)", (9,))

    _relation(r, "holomorphic-c24", "F4:6 * A2:2", 10, " (conjectural)")
    return r
