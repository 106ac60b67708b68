import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from wittforge.abelian import (
    FiniteAbelianGroup,
    element_add,
    element_scalar,
    isomorphisms,
    make_group,
    quotient,
    smith_normal_form,
    subgroup_as_group,
    subgroup_generated,
    trivial_subgroup,
    whole_group,
)
from wittforge.errors import DimensionError, InvalidGroupError, TooLargeError


def test_make_group_orders():
    assert make_group([2, 2, 4]).order == 16
    assert make_group([1]).order == 1
    assert make_group([5]).order == 5


@pytest.mark.parametrize("bad", [[0], [3, -1]])
def test_make_group_rejects(bad):
    with pytest.raises(InvalidGroupError):
        make_group(bad)


def test_element_arithmetic():
    assert element_add(make_group([4]), (3,), (2,)) == (1,)
    assert element_add(make_group([2, 2]), (1, 0), (1, 1)) == (0, 1)
    assert element_scalar(make_group([5]), 4, (3,)) == (2,)
    with pytest.raises(DimensionError):
        element_add(make_group([2, 2]), (1,), (1, 0))


def test_index_roundtrip_is_lexicographic():
    g = make_group([2, 3, 4])
    elems = list(g.elements())
    assert elems == sorted(elems)
    assert [g.index(x) for x in elems] == list(range(g.order))


def test_subgroup_generated():
    assert set(subgroup_generated(make_group([4]), [(2,)])) == {(0,), (2,)}
    assert subgroup_generated(make_group([2, 2]), [(1, 0), (0, 1)]).order == 4
    assert set(subgroup_generated(make_group([6]), [])) == {(0,)}


def test_quotients():
    g = make_group([4])
    q, _ = quotient(g, subgroup_generated(g, [(2,)]))
    assert q.invariant_factors == (2,)
    g = make_group([2, 2])
    q, proj = quotient(g, subgroup_generated(g, [(1, 1)]))
    assert q.order == 2
    assert proj((1, 1)) == q.identity
    g = make_group([6])
    q, _ = quotient(g, trivial_subgroup(g))
    assert q.invariant_factors == (6,)


def test_quotient_by_whole_group_is_trivial():
    g = make_group([4, 6])
    q, _ = quotient(g, whole_group(g))
    assert q.order == 1


def _det(m):
    return round(np.linalg.det(np.array(m, dtype=float)))


def test_snf_examples():
    assert smith_normal_form([[2, 0], [0, 4]])[1] == [[2, 0], [0, 4]]
    assert smith_normal_form([[1, 2], [3, 4]])[1] == [[1, 0], [0, 2]]
    assert smith_normal_form([[0, 0], [0, 0]])[1] == [[0, 0], [0, 0]]


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_snf_properties(rows, cols, data):
    m = [[data.draw(st.integers(-12, 12)) for _ in range(cols)] for _ in range(rows)]
    U, D, V = smith_normal_form(m)
    assert (np.array(U) @ np.array(m) @ np.array(V)).tolist() == D
    assert abs(_det(U)) == 1 and abs(_det(V)) == 1
    diag = [D[i][i] for i in range(min(rows, cols))]
    for i in range(rows):
        for j in range(cols):
            if i != j:
                assert D[i][j] == 0
    assert all(d >= 0 for d in diag)
    nz = [d for d in diag if d]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))


def test_isomorphism_counts():
    assert len(list(isomorphisms(make_group([2]), make_group([2])))) == 1
    assert list(isomorphisms(make_group([4]), make_group([2, 2]))) == []
    assert len(list(isomorphisms(make_group([5]), make_group([5])))) == 4


def _brute_force_aut_count(g):
    """Count bijective homomorphisms by checking every assignment of generators."""
    count = 0
    elems = list(g.elements())
    for imgs in itertools.product(elems, repeat=g.rank):
        # a generator of order n must go to an element killed by n
        ok = all(all((n * c) % m == 0 for c, m in zip(y, g.orders)) for y, n in zip(imgs, g.orders))
        if not ok:
            continue
        image = {tuple(sum(k * y[t] for k, y in zip(x, imgs)) % g.orders[t] for t in range(g.rank))
                 for x in elems}
        count += len(image) == g.order
    return count


@pytest.mark.parametrize("orders", [(2, 2), (2, 4), (3, 3), (6,), (8,)])
def test_isomorphisms_match_brute_force(orders):
    g = make_group(orders)
    assert len(list(isomorphisms(g, g))) == _brute_force_aut_count(g)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from([2, 3, 4, 6, 8, 9]), min_size=1, max_size=3), st.data())
def test_subgroup_lagrange_and_quotient(orders, data):
    g = FiniteAbelianGroup(tuple(orders))
    if g.order > 200:
        return
    gens = [g.element(data.draw(st.integers(0, g.order - 1))) for _ in range(data.draw(st.integers(0, 2)))]
    h = subgroup_generated(g, gens)
    assert g.order % h.order == 0
    q, proj = quotient(g, h)
    assert q.order * h.order == g.order
    for x in h:
        assert proj(x) == q.identity
    hg, emb = subgroup_as_group(h)
    assert hg.order == h.order
    assert {emb(y) for y in hg.elements()} == set(h)


def test_rank_zero_group_is_trivial():
    assert make_group([]).order == 1


def test_invariant_factors_and_isomorphism():
    assert make_group([2, 3]).invariant_factors == (6,)
    assert make_group([6]).is_isomorphic(make_group([3, 2]))
    assert not make_group([4]).is_isomorphic(make_group([2, 2]))
    assert str(make_group([1])) == "trivial"


def test_enumeration_cap(monkeypatch):
    monkeypatch.setenv("WITTFORGE_MAX_GROUP_ORDER", "64")
    with pytest.raises(TooLargeError):
        FiniteAbelianGroup((16, 16)).coords
