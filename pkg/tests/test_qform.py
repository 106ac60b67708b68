from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from wittforge.abelian import make_group, subgroup_generated, trivial_subgroup, whole_group
from wittforge.errors import ArgumentError, NotAQuadraticFormError, PreconditionError
from wittforge.qform import (
    bilinear,
    cyclic,
    direct_sum,
    from_gram,
    from_table,
    is_anisotropic,
    is_isotropic,
    is_nondegenerate,
    isometric,
    isotropic_subgroups,
    m_subquotient,
    orthogonal_complement,
    prime_part,
    reverse,
    trivial,
    zero_form,
)


@pytest.fixture
def hyperbolic():
    return from_gram(make_group([2, 2]), [0, 0], {(0, 1): F(1, 2)})


def test_from_table_valid_and_invalid():
    pm = from_table(make_group([2]), {(0,): 0, (1,): F(1, 4)})
    assert bilinear(pm, (1,), (1,)) == F(1, 2)
    with pytest.raises(NotAQuadraticFormError) as exc:
        from_table(make_group([2]), {(0,): 0, (1,): F(1, 3)})
    assert exc.value.witness
    assert not is_nondegenerate(zero_form(make_group([3, 3])))


def test_from_table_rejects_nonzero_at_identity():
    with pytest.raises(NotAQuadraticFormError):
        from_table(make_group([3]), lambda x: F(1, 3))


def test_from_gram_expansion(hyperbolic):
    pm = from_gram(make_group([4]), [F(1, 8)])
    assert [pm.q((l,)) for l in range(4)] == [0, F(1, 8), F(1, 2), F(1, 8)]
    assert hyperbolic.q((1, 1)) == F(1, 2)
    pm = from_gram(make_group([5]), [F(1, 5)])
    assert [pm.q((l,)) for l in range(5)] == [F(l * l % 5, 5) for l in range(5)]


def test_bilinear_examples(hyperbolic):
    assert bilinear(cyclic(2, F(1, 4)), (1,), (1,)) == F(1, 2)
    assert bilinear(hyperbolic, (1, 0), (0, 1)) == F(1, 2)
    assert bilinear(hyperbolic, (0, 0), (1, 1)) == 0


def test_nondegeneracy_and_anisotropy(hyperbolic):
    assert is_nondegenerate(cyclic(2, F(1, 4)))
    assert not is_nondegenerate(zero_form(make_group([2])))
    assert is_nondegenerate(hyperbolic)
    assert is_anisotropic(cyclic(5, F(1, 5)))
    assert not is_anisotropic(hyperbolic)
    assert is_anisotropic(trivial())


def test_orthogonal_complement(hyperbolic):
    g = hyperbolic.group
    h = subgroup_generated(g, [(1, 0)])
    assert set(orthogonal_complement(hyperbolic, h)) == set(h)
    assert orthogonal_complement(hyperbolic, trivial_subgroup(g)).order == 4
    z4 = cyclic(4, F(1, 8))
    assert set(orthogonal_complement(z4, subgroup_generated(z4.group, [(2,)]))) == {(0,), (2,)}


def test_isotropy(hyperbolic):
    assert is_isotropic(hyperbolic, subgroup_generated(hyperbolic.group, [(1, 0)]))
    z2 = cyclic(2, F(1, 4))
    assert not is_isotropic(z2, whole_group(z2.group))
    assert is_isotropic(z2, trivial_subgroup(z2.group))


def test_m_subquotient_examples(hyperbolic):
    assert m_subquotient(hyperbolic, subgroup_generated(hyperbolic.group, [(1, 0)])).order == 1
    z5 = cyclic(5, F(1, 5))
    assert isometric(m_subquotient(z5, trivial_subgroup(z5.group)), z5)
    sq = from_gram(make_group([5, 5]), [F(1, 5), F(1, 5)])
    assert m_subquotient(sq, subgroup_generated(sq.group, [(1, 2)])).order == 1


def test_m_subquotient_preconditions():
    z2 = cyclic(2, F(1, 4))
    with pytest.raises(PreconditionError):
        m_subquotient(z2, whole_group(z2.group))
    deg = zero_form(make_group([2]))
    with pytest.raises(PreconditionError):
        m_subquotient(deg, trivial_subgroup(deg.group))


def test_direct_sum_and_reverse():
    s = direct_sum(cyclic(2, F(1, 4)), cyclic(2, F(3, 4)))
    assert s.q((1, 1)) == 0
    assert isometric(direct_sum(cyclic(3, F(1, 3)), trivial()), cyclic(3, F(1, 3)))
    assert reverse(cyclic(2, F(1, 4))).q((1,)) == F(3, 4)
    z = zero_form(make_group([3]))
    assert reverse(z).q((1,)) == 0


def test_prime_parts():
    pm = from_gram(make_group([6]), [F(1, 12)])
    two = prime_part(pm, 2)
    assert two.order == 2 and set(two.table().values()) == {0, F(3, 4)}
    three = prime_part(pm, 3)
    assert three.order == 3 and set(three.table().values()) == {0, F(1, 3)}
    assert prime_part(cyclic(4, F(1, 8)), 3).order == 1
    with pytest.raises(ArgumentError):
        prime_part(pm, 4)


def test_isometry_examples():
    z5 = cyclic(5, F(1, 5))
    assert isometric(z5, cyclic(5, F(4, 5)))
    assert not isometric(z5, cyclic(5, F(2, 5)))
    assert isometric(z5, z5)


def test_isometry_ignores_presentation():
    a = from_gram(make_group([2, 3]), [F(1, 4), F(1, 3)])
    b = cyclic(6, F(7, 12))
    # q(3) = 63/12 = 1/4 and q(2) = 28/12 = 1/3 mod 1
    assert isometric(a, b)


def test_isotropic_subgroups_of_hyperbolic(hyperbolic):
    subs = list(isotropic_subgroups(hyperbolic))
    assert sorted(s.order for s in subs) == [1, 2, 2]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 4, 5, 8, 9]), st.data())
def test_reverse_is_involution_and_negates_b(n, data):
    a = data.draw(st.integers(0, 2 * n - 1))
    if (a * n) % 2:
        a += 1
    pm = cyclic(n, F(a, 2 * n))
    r = reverse(pm)
    assert isometric(reverse(r), pm)
    for x in range(n):
        for y in range(n):
            assert (bilinear(r, (x,), (y,)) + bilinear(pm, (x,), (y,))) % 1 == 0


def test_corpus_forms_satisfy_axioms(corpus):
    for pm in corpus[:40]:
        g = pm.group
        elems = list(g.elements())
        assert pm.q(g.identity) == 0
        for x in elems:
            assert pm.q(g.neg(x)) == pm.q(x)
            for k in range(g.exponent):
                assert pm.q(g.scalar(k, x)) == (k * k * pm.q(x)) % 1
