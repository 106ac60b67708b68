"""Witt classes of metric groups.

A class is carried by an anisotropic representative obtained by repeatedly
quotienting out the cyclic subgroup of one isotropic element. Equality is an
isometry search between representatives, not a normal form.
"""
from __future__ import annotations

import functools
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from .abelian import subgroup_generated
from .charge import CentralCharge, additive_charge
from .errors import InternalInconsistencyError, PreconditionError, TooLargeError
from .qform import (
    PreMetricGroup,
    direct_sum,
    is_anisotropic,
    is_nondegenerate,
    isometric,
    isotropic_elements,
    m_subquotient,
    normalized,
    prime_factors,
    prime_part,
    reverse,
    trivial,
)

ORDER_SAFETY_BOUND = 16
DEFAULT_SPAN_CAP = 256


def reduce_anisotropic(pm: PreMetricGroup, *, reverse_pivot: bool = False) -> PreMetricGroup:
    """Anisotropic metric group Witt equivalent to ``pm``.

    Each step takes the lexicographically first (or last, with
    ``reverse_pivot``) non-zero isotropic element x and passes to the
    m-subquotient by <x>; the order drops strictly every time.
    """
    if not is_nondegenerate(pm):
        raise PreconditionError(f"cannot reduce degenerate form {pm.describe()}")
    while True:
        iso = isotropic_elements(pm)
        if iso.size == 0:
            return normalized(pm)
        x = pm.group.element(int(iso[-1] if reverse_pivot else iso[0]))
        pm = m_subquotient(pm, subgroup_generated(pm.group, [x]))


class WittClass:
    """Element of the Witt group of metric groups.

    ``==`` and ``hash`` follow Witt equivalence, so classes can live in sets.
    """

    def __init__(self, representative: PreMetricGroup, *, _checked: bool = False):
        if not _checked and not (is_nondegenerate(representative) and is_anisotropic(representative)):
            raise PreconditionError("a Witt class representative must be anisotropic and non-degenerate")
        self.representative = representative
        self.cached_charge: CentralCharge = additive_charge(representative)

    @cached_property
    def _key(self):
        rep = self.representative
        return (
            self.cached_charge,
            rep.group.invariant_factors,
            tuple(sorted(Fraction(int(v), rep.den) for v in rep.qnum)),
        )

    def is_zero(self) -> bool:
        return self.representative.order == 1

    def __eq__(self, other):
        if not isinstance(other, WittClass):
            return NotImplemented
        return equals(self, other)

    def __hash__(self):
        return hash(self._key)

    def __add__(self, other):
        return add(self, other)

    def __neg__(self):
        return neg(self)

    def __sub__(self, other):
        return add(self, neg(other))

    def __mul__(self, n: int):
        return multiple(n, self)

    __rmul__ = __mul__

    def __repr__(self):
        return f"WittClass({self.representative.describe()}, c={self.cached_charge})"

    def __str__(self):
        return "0" if self.is_zero() else f"[{self.representative.describe()}]"


def witt_class(pm: PreMetricGroup) -> WittClass:
    return WittClass(reduce_anisotropic(pm), _checked=True)


@functools.lru_cache(maxsize=None)
def zero() -> WittClass:
    return WittClass(trivial(), _checked=True)


def add(w1: WittClass, w2: WittClass) -> WittClass:
    return witt_class(direct_sum(w1.representative, w2.representative))


def neg(w: WittClass) -> WittClass:
    return WittClass(reverse(w.representative), _checked=True)


def multiple(n: int, w: WittClass) -> WittClass:
    base = w if n >= 0 else neg(w)
    acc = zero()
    for _ in range(abs(n)):
        acc = add(acc, base)
    return acc


def equals(w1: WittClass, w2: WittClass) -> bool:
    if w1._key != w2._key:
        return False
    return isometric(w1.representative, w2.representative)


def order(w: WittClass) -> int:
    """Smallest n >= 1 with n*w = 0."""
    acc = w
    for n in range(1, ORDER_SAFETY_BOUND + 1):
        if acc.is_zero():
            return n
        acc = add(acc, w)
    raise InternalInconsistencyError(
        f"class {w} has no vanishing multiple up to {ORDER_SAFETY_BOUND}; Witt classes of metric groups have exponent 8")


def decompose(w: WittClass) -> dict[int, WittClass]:
    """Per-prime components of ``w``."""
    rep = w.representative
    return {p: witt_class(prime_part(rep, p)) for p in prime_factors(rep.order)}


def generated_subgroup(gens: Iterable[WittClass], *, cap: int = DEFAULT_SPAN_CAP) -> set[WittClass]:
    """All classes in the subgroup generated by ``gens``."""
    gens = list(gens)
    found = {zero()}
    frontier = [zero()]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                s = add(w, g)
                if s not in found:
                    found.add(s)
                    nxt.append(s)
                    if len(found) > cap:
                        raise TooLargeError(f"generated subgroup exceeds {cap} classes")
        frontier = nxt
    return found


__all__ = [
    "reduce_anisotropic",
    "WittClass",
    "witt_class",
    "zero",
    "add",
    "neg",
    "multiple",
    "equals",
    "order",
    "decompose",
    "generated_subgroup",
]
