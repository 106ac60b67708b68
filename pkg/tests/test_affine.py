from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from wittforge.affine import (
    LevelledAlgebra,
    SimpleLieType,
    central_charge,
    dual_coxeter,
    lie_dim,
    parse_algebra,
    parse_relation,
    plus_sector_charge,
    relation_charge,
    resolve_alias,
    virasoro_charge,
)
from wittforge.charge import CentralCharge
from wittforge.errors import ArgumentError, ParseError, UnsupportedSymbolError
from wittforge.rootsystem import cartan_matrix, lie_data_from_roots
from wittforge.suite import sl2_suite


def _types(max_rank):
    for fam, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 3)):
        for r in range(lo, max_rank + 1):
            yield SimpleLieType(fam, r)
    for fam, ranks in (("E", (6, 7, 8)), ("F", (4,)), ("G", (2,))):
        for r in ranks:
            yield SimpleLieType(fam, r)


@pytest.mark.parametrize("t", list(_types(25)), ids=str)
def test_lie_table_matches_root_system(t):
    assert (lie_dim(t), dual_coxeter(t)) == lie_data_from_roots(t.family, t.rank)


def test_cartan_conventions():
    assert cartan_matrix("B", 2)[0][1] * cartan_matrix("B", 2)[1][0] == 2
    assert sorted(v for row in cartan_matrix("G", 2) for v in row) == [-3, -1, 2, 2]


def test_lie_examples():
    assert (lie_dim(SimpleLieType("A", 1)), dual_coxeter(SimpleLieType("A", 1))) == (3, 2)
    assert (lie_dim(SimpleLieType("G", 2)), dual_coxeter(SimpleLieType("G", 2))) == (14, 4)
    assert (lie_dim(SimpleLieType("E", 8)), dual_coxeter(SimpleLieType("E", 8))) == (248, 30)
    for fam, r in (("A", 0), ("B", 1), ("D", 2), ("E", 9), ("F", 3)):
        with pytest.raises(ArgumentError):
            SimpleLieType(fam, r)


def test_central_charges():
    assert central_charge(parse_algebra("A1:1")) == 1
    assert central_charge(parse_algebra("A1:10")) == central_charge(parse_algebra("B2:1")) == F(5, 2)
    assert central_charge(parse_algebra("G2:1")) == F(14, 5)
    assert central_charge(parse_algebra("u1:7")) == 1


def test_aliases():
    assert central_charge(parse_algebra("su(6):1")) == 5
    assert resolve_alias(parse_algebra("so(9):1")) == [(SimpleLieType("B", 4), 1)]
    assert central_charge(parse_algebra("so(9):1")) == F(9, 2)
    assert central_charge(parse_algebra("sp(4):1")) == F(5, 2)
    assert resolve_alias(parse_algebra("sp(2):3")) == [(SimpleLieType("A", 1), 3)]
    assert resolve_alias(parse_algebra("so(3):2")) == [(SimpleLieType("A", 1), 4)]
    assert len(resolve_alias(parse_algebra("so(4):1"))) == 2
    assert resolve_alias(parse_algebra("so(6):1")) == [(SimpleLieType("A", 3), 1)]
    for bad in ("so(2):1", "so(1):3", "D1:1", "sp(3):1", "su(1):1"):
        with pytest.raises(UnsupportedSymbolError):
            resolve_alias(parse_algebra(bad))


@given(st.integers(3, 60), st.integers(1, 30))
def test_so_charge_is_level_times_dimension_over_shifted_level(n, k):
    # so(n) at level k: k n(n-1)/2 / (k + n - 2), through every alias branch
    expected = F(k * n * (n - 1) // 2, k + n - 2)
    assert central_charge(LevelledAlgebra("so", n, k)) == expected


def test_parse_errors():
    for bad in ("A1", "X2:1", "A1:x", "su6:1"):
        with pytest.raises(ParseError):
            parse_algebra(bad)


def test_virasoro():
    assert virasoro_charge(1) == F(1, 2)
    assert virasoro_charge(2) == F(7, 10)
    vals = [virasoro_charge(m) for m in range(1, 101)]
    assert all(a < b < 1 for a, b in zip(vals, vals[1:]))
    with pytest.raises(ArgumentError):
        virasoro_charge(0)


def test_plus_sector():
    assert plus_sector_charge(3) == CentralCharge(F(14, 5))
    assert plus_sector_charge(5) == CentralCharge(F(8, 7))
    assert plus_sector_charge(7) == CentralCharge(F(10, 3))
    with pytest.raises(ArgumentError):
        plus_sector_charge(4)


def test_relations():
    assert relation_charge(parse_relation("A1:6^2 * A1:2^-3")).is_zero()
    assert relation_charge(parse_relation("A1:8 * sl2plus:3^2")).is_zero()
    assert relation_charge(parse_relation("F4:6 * A2:2")).is_zero()
    assert relation_charge(parse_relation("A1:1 * Z(2:1/4)^-1")).is_zero()
    assert relation_charge(parse_relation("Vir:m=1^2 * A1:1^-1")).is_zero()
    assert relation_charge(parse_relation("A1:2")) == CentralCharge(F(3, 2))
    r = parse_relation("A1:6^2 * A1:2^-3")
    assert relation_charge(r.inverse()).is_zero()


def test_sl2_suite_is_green():
    report = sl2_suite()
    assert report.ok
    ids = {e.source_id for e in report.entries}
    assert {"item4:embedding", "item7:embedding", "item8:value", "holomorphic-c24"} <= ids
