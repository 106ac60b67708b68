"""Central charges of affine categories C(g, k) and the relations among them.

Everything here is exact rational arithmetic. Relations between Witt classes
are checked through the central-charge homomorphism into Q/8Z, which gives a
necessary condition; the pointed part is cross-checked against honest Witt
arithmetic where the classes are pointed.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .charge import CentralCharge, additive_charge
from .errors import ArgumentError, ParseError, UnsupportedSymbolError
from .qform import PreMetricGroup

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_EXCEPTIONAL = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True)
class SimpleLieType:
    family: str
    rank: int

    def __post_init__(self):
        f, r = self.family, self.rank
        if f in _MIN_RANK:
            ok = r >= _MIN_RANK[f]
        elif f in _EXCEPTIONAL:
            ok = r in _EXCEPTIONAL[f]
        else:
            raise ArgumentError(f"unknown Lie family {f!r}")
        if not ok:
            raise ArgumentError(f"{f}{r} is not a simple Lie algebra in the supported range")

    def __str__(self):
        return f"{self.family}{self.rank}"


def is_valid_type(family: str, rank: int) -> bool:
    try:
        SimpleLieType(family, rank)
    except ArgumentError:
        return False
    return True


def lie_dim(t: SimpleLieType) -> int:
    n = t.rank
    return {
        "A": lambda: n * (n + 2),
        "B": lambda: n * (2 * n + 1),
        "C": lambda: n * (2 * n + 1),
        "D": lambda: n * (2 * n - 1),
        "E": lambda: {6: 78, 7: 133, 8: 248}[n],
        "F": lambda: 52,
        "G": lambda: 14,
    }[t.family]()


def dual_coxeter(t: SimpleLieType) -> int:
    n = t.rank
    return {
        "A": lambda: n + 1,
        "B": lambda: 2 * n - 1,
        "C": lambda: n + 1,
        "D": lambda: 2 * n - 2,
        "E": lambda: {6: 12, 7: 18, 8: 30}[n],
        "F": lambda: 9,
        "G": lambda: 4,
    }[t.family]()


class _U1:
    """The abelian factor u(1); its central charge is 1 at every level."""

    def __repr__(self):
        return "u1"

    __str__ = __repr__


U1 = _U1()

Factor = tuple[Union[SimpleLieType, _U1], int]


@dataclass(frozen=True)
class LevelledAlgebra:
    """A Lie symbol at a positive level.

    ``head`` is a Dynkin letter (``arg`` = rank), one of ``su``/``sl``/``so``/
    ``sp`` (``arg`` = matrix size) or ``u1``.
    """

    head: str
    arg: int
    level: int

    def __str__(self):
        if self.head in "ABCDEFG":
            return f"{self.head}{self.arg}:{self.level}"
        if self.head == "u1":
            return f"u1:{self.level}"
        return f"{self.head}({self.arg}):{self.level}"


def resolve_alias(a: LevelledAlgebra) -> list[Factor]:
    """Simple factors (or u(1)) with their levels."""
    h, n, k = a.head, a.arg, a.level
    if k < 1 and h != "u1":
        raise ArgumentError(f"level must be positive in {a}")
    if h in "ABCDEFG" and len(h) == 1:
        if not is_valid_type(h, n):
            raise UnsupportedSymbolError(f"{h}{n} does not name a simple Lie algebra")
        return [(SimpleLieType(h, n), k)]
    if h in ("su", "sl"):
        if n < 2:
            raise UnsupportedSymbolError(f"{h}({n}) is not simple")
        return [(SimpleLieType("A", n - 1), k)]
    if h == "sp":
        if n < 2 or n % 2:
            raise UnsupportedSymbolError(f"sp({n}) needs an even size >= 2")
        m = n // 2
        return [(SimpleLieType("A", 1), k)] if m == 1 else [(SimpleLieType("C", m), k)]
    if h == "so":
        if n <= 2:
            raise UnsupportedSymbolError(f"so({n}) is not semisimple; no convention is assumed")
        if n == 3:
            return [(SimpleLieType("A", 1), 2 * k)]
        if n == 4:
            return [(SimpleLieType("A", 1), k), (SimpleLieType("A", 1), k)]
        if n == 5:
            return [(SimpleLieType("C", 2), k)]
        if n == 6:
            return [(SimpleLieType("A", 3), k)]
        if n % 2:
            return [(SimpleLieType("B", (n - 1) // 2), k)]
        return [(SimpleLieType("D", n // 2), k)]
    if h == "u1":
        return [(U1, k)]
    raise UnsupportedSymbolError(f"unknown symbol head {h!r}")


def factor_charge(t, k: int) -> Fraction:
    if t is U1:
        return Fraction(1)
    return Fraction(k * lie_dim(t), k + dual_coxeter(t))


def central_charge(a: LevelledAlgebra | SimpleLieType, level: int | None = None) -> Fraction:
    """``k dim g / (k + h^vee)``, summed over the factors of an alias."""
    if isinstance(a, SimpleLieType):
        if level is None or level < 1:
            raise ArgumentError("a positive level is required")
        return factor_charge(a, level)
    return sum((factor_charge(t, k) for t, k in resolve_alias(a)), Fraction(0))


def virasoro_charge(m: int) -> Fraction:
    if m < 1:
        raise ArgumentError(f"Virasoro index must be >= 1, got {m}")
    return 1 - Fraction(6, (m + 2) * (m + 3))


def plus_sector_charge(k: int) -> CentralCharge:
    """Charge of the integer-spin part of C(sl(2), k) for odd k >= 3."""
    if k < 3 or k % 2 == 0:
        raise ArgumentError(f"plus sector needs odd k >= 3, got {k}")
    sign = 1 if ((k + 1) // 2) % 2 == 0 else -1
    return CentralCharge(Fraction(3 * k, k + 2) + sign)


# --------------------------------------------------------------------------
# Symbols
# --------------------------------------------------------------------------

_DYNKIN = re.compile(r"^([A-G])(\d+)$")
_MATRIX = re.compile(r"^(su|sl|so|sp)\((\d+)\)$")


def parse_algebra(text: str) -> LevelledAlgebra:
    """Parse ``A1:10``, ``su(6):1``, ``G2:1``, ``u1:1`` and friends."""
    s = text.strip().replace(" ", "")
    name, sep, level = s.rpartition(":")
    if not sep or not level.lstrip("-").isdigit():
        raise ParseError(f"expected <algebra>:<level>, got {text!r}")
    k = int(level)
    if name in ("u1", "u(1)"):
        return LevelledAlgebra("u1", 1, k)
    m = _DYNKIN.match(name)
    if m:
        return LevelledAlgebra(m.group(1), int(m.group(2)), k)
    m = _MATRIX.match(name)
    if m:
        return LevelledAlgebra(m.group(1), int(m.group(2)), k)
    raise ParseError(f"unrecognised algebra symbol {name!r}")


# --------------------------------------------------------------------------
# Relations
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Virasoro:
    m: int

    def __str__(self):
        return f"Vir:m={self.m}"


@dataclass(frozen=True)
class PlusSector:
    k: int

    def __str__(self):
        return f"sl2plus:{self.k}"


Term = Union[LevelledAlgebra, PreMetricGroup, Virasoro, PlusSector]


@dataclass(frozen=True)
class RelationExpr:
    """Formal product of Witt classes with integer exponents."""

    factors: tuple[tuple[Term, int], ...]

    def __post_init__(self):
        if any(e == 0 for _, e in self.factors):
            raise ArgumentError("exponents in a relation must be non-zero")

    def inverse(self) -> RelationExpr:
        return RelationExpr(tuple((t, -e) for t, e in self.factors))

    def __str__(self):
        parts = []
        for t, e in self.factors:
            name = f"Z({t.describe()})" if isinstance(t, PreMetricGroup) else str(t)
            parts.append(name if e == 1 else f"{name}^{e}")
        return " * ".join(parts)


def term_charge(t: Term) -> CentralCharge:
    if isinstance(t, PreMetricGroup):
        return additive_charge(t)
    if isinstance(t, Virasoro):
        return CentralCharge(virasoro_charge(t.m))
    if isinstance(t, PlusSector):
        return plus_sector_charge(t.k)
    return CentralCharge(central_charge(t))


def relation_charge(r: RelationExpr) -> CentralCharge:
    total = CentralCharge(Fraction(0))
    for t, e in r.factors:
        total = total + e * term_charge(t)
    return total


def parse_term(text: str) -> Term:
    s = text.strip()
    if s.startswith("Vir:"):
        m = re.fullmatch(r"Vir:m=(\d+)", s.replace(" ", ""))
        if not m:
            raise ParseError(f"expected Vir:m=<int>, got {text!r}")
        return Virasoro(int(m.group(1)))
    if s.startswith("sl2plus:"):
        body = s.split(":", 1)[1]
        if not body.isdigit():
            raise ParseError(f"expected sl2plus:<odd k>, got {text!r}")
        return PlusSector(int(body))
    if s.startswith("Z(") and s.endswith(")"):
        from .parsing import parse_group_spec

        return parse_group_spec(s[2:-1])
    return parse_algebra(s)


def parse_relation(text: str) -> RelationExpr:
    """Parse ``"A1:6^2 * A1:2^-3"``; exponents default to 1."""
    factors = []
    for chunk in text.split("*"):
        chunk = chunk.strip()
        if not chunk:
            raise ParseError(f"empty factor in {text!r}")
        base, _, exp = chunk.partition("^")
        try:
            e = int(exp) if exp else 1
        except ValueError:
            raise ParseError(f"bad exponent {exp!r} in {chunk!r}") from None
        factors.append((parse_term(base), e))
    if not factors:
        raise ParseError("empty relation")
    return RelationExpr(tuple(factors))
