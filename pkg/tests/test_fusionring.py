import math

import numpy as np
import pytest

from wittforge.abelian import make_group
from wittforge.errors import InconsistentRingError, PreconditionError
from wittforge.fusionring import (
    FusionRing,
    based_isomorphic,
    builtin_ring,
    etale_dimension_ledger,
    fibonacci,
    fp_homomorphism_defect,
    ising,
    pointed_ring,
    product_ring,
    regular_object,
    regular_residual,
    subring,
    verlinde_sl2,
)
from wittforge.parsing import parse_ring_text

PHI = (1 + math.sqrt(5)) / 2


def test_fibonacci_and_ising():
    fib = fibonacci()
    assert abs(fib.fp.dims[1] - PHI) < 1e-12
    assert abs(fib.fp.total - (1 + PHI ** 2)) < 1e-12
    isg = ising()
    assert np.allclose(isg.fp.dims, (1, 1, math.sqrt(2)))
    assert abs(isg.fp.total - 4) < 1e-12


def test_regular_objects():
    assert np.allclose(regular_object(fibonacci()), (1, PHI))
    assert np.allclose(regular_object(pointed_ring(make_group([2]))), (1, 1))
    assert np.allclose(regular_object(ising()), (1, 1, math.sqrt(2)))


def test_pointed_rings():
    r = pointed_ring(make_group([5]))
    assert r.fp.dims == (1.0,) * 5 and abs(r.fp.total - 5) < 1e-12
    assert pointed_ring(make_group([1])).rank == 1
    assert pointed_ring(make_group([4])).rank == 4


def test_products():
    ff = product_ring(fibonacci(), fibonacci())
    assert abs(ff.fp.total - ((5 + math.sqrt(5)) / 2) ** 2) < 1e-9
    one = pointed_ring(make_group([1]))
    assert based_isomorphic(product_ring(ising(), one), ising())
    z6 = product_ring(pointed_ring(make_group([2])), pointed_ring(make_group([3])))
    assert based_isomorphic(z6, pointed_ring(make_group([6])))


def test_verlinde_small_levels():
    assert based_isomorphic(verlinde_sl2(1), pointed_ring(make_group([2])))
    assert based_isomorphic(verlinde_sl2(2), ising())
    assert based_isomorphic(subring(verlinde_sl2(3), [0, 2]), fibonacci())


@pytest.mark.parametrize("k", range(1, 31))
def test_verlinde_matches_sine_ratio(k):
    r = verlinde_sl2(k)
    expected = [math.sin((j + 1) * math.pi / (k + 2)) / math.sin(math.pi / (k + 2)) for j in range(k + 1)]
    assert np.max(np.abs(np.array(r.fp.dims) - expected)) < 1e-9
    assert regular_residual(r, r.fp.dims) < 1e-9
    assert fp_homomorphism_defect(r) < 1e-9


def test_validation_rejects_broken_rings():
    n = fibonacci().N.copy()
    n[1, 1, 0] = 0
    with pytest.raises(InconsistentRingError):
        FusionRing(["1", "t"], n)
    n = ising().N.copy()
    n[1, 1, 0] = 0
    with pytest.raises(InconsistentRingError):
        FusionRing(["1", "e", "s"], n)


def test_non_associative_ring_names_quadruple():
    # (yy)x = x + 1 + y but y(yx) = x
    text = "labels 1 x y\nx x x = 1 + y\nx x y = x\ny x y = 1 + x\n"
    with pytest.raises(InconsistentRingError) as exc:
        parse_ring_text(text)
    assert exc.value.witness is not None


def test_ring_file_roundtrip():
    r = parse_ring_text("labels 1 s e\ns x s = 1 + e\ne x s = s\ne x e = 1\n")
    assert based_isomorphic(r, ising())


def test_etale_ledger():
    d = 3.0
    assert etale_dimension_ledger(d * d, d) == (d, 1.0, True)
    with pytest.raises(PreconditionError):
        etale_dimension_ledger(4.0, 3.0)


def test_builtin_names():
    assert builtin_ring("fib").rank == 2
    assert builtin_ring("sl2:4").rank == 5
    assert builtin_ring("group:2,2").rank == 4
