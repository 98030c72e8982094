"""Binary quadratic forms: reduction, composition, class groups."""

import random

import pytest
from hypothesis import given, strategies as st

from smallrank.errors import (
    DiscriminantMismatch,
    NotPositiveDefinite,
    UnsupportedDiscriminant,
)
from smallrank.quadforms import (
    class_group,
    compose,
    content,
    discriminant,
    enumerate_reduced,
    is_reduced,
    mat2_mul,
    principal_form,
    reduce,
    represent,
    twisted_act,
)

small = st.integers(min_value=-30, max_value=30)


def _posdef_forms():
    # c is forced far enough above b^2/4a that the discriminant is negative
    return st.tuples(
        st.integers(min_value=1, max_value=12),
        st.integers(min_value=-12, max_value=12),
        st.integers(min_value=2, max_value=12),
    ).map(lambda t: (t[0], t[1], (t[1] * t[1]) // (4 * t[0]) + t[2]))


def _unimodular():
    # products of shears and a sign flip; determinant is always +-1
    shear = st.integers(min_value=-4, max_value=4)

    def build(x, y, z, e):
        m = mat2_mul(((1, x), (0, 1)), ((1, 0), (y, 1)))
        m = mat2_mul(m, ((1, z), (0, 1)))
        return mat2_mul(m, ((1, 0), (0, e)))

    return st.builds(build, shear, shear, shear, st.sampled_from((1, -1)))


def test_discriminant_and_content():
    assert discriminant((1, 0, 25)) == -100
    assert discriminant((2, 1, 3)) == -23
    assert content((4, 6, 8)) == 2
    assert content((5, 0, 5)) == 5
    assert content((2, 1, 3)) == 1


@given(_unimodular(), _unimodular(), _posdef_forms())
def test_twisted_action_composes(m2, m1, f):
    assert twisted_act(m2, twisted_act(m1, f)) == twisted_act(mat2_mul(m2, m1), f)


@given(_unimodular(), _posdef_forms())
def test_twisted_action_preserves_disc_and_content(m, f):
    g = twisted_act(m, f)
    assert discriminant(g) == discriminant(f)
    assert content(g) == content(f)


@given(_posdef_forms())
def test_reduce_contract(f):
    g, m = reduce(f)
    assert is_reduced(g)
    assert discriminant(g) == discriminant(f)
    assert twisted_act(m, f) == g


def test_reduce_errors():
    with pytest.raises(UnsupportedDiscriminant):
        reduce((1, 5, 1))
    with pytest.raises(NotPositiveDefinite):
        reduce((-1, 0, -1))


def test_enumerate_reduced_spots():
    assert set(enumerate_reduced(-100)) == {(1, 0, 25), (2, 2, 13), (5, 0, 5)}
    assert set(enumerate_reduced(-23)) == {(1, 1, 6), (2, 1, 3), (2, -1, 3)}
    assert set(enumerate_reduced(-4)) == {(1, 0, 1)}
    assert set(enumerate_reduced(-3)) == {(1, 1, 1)}
    with pytest.raises(UnsupportedDiscriminant):
        enumerate_reduced(-5)
    with pytest.raises(UnsupportedDiscriminant):
        enumerate_reduced(4)


def test_enumerate_reduced_is_complete_and_reduced():
    for d in (-23, -56, -84, -100, -47):
        forms = enumerate_reduced(d)
        assert len(set(forms)) == len(forms)
        for f in forms:
            assert is_reduced(f)
            assert discriminant(f) == d
        # every reduced class appears: reducing a random equivalent lands back
        rng = random.Random(d)
        for f in forms:
            m = ((1, rng.randint(-3, 3)), (0, 1))
            g = twisted_act(m, f)
            assert reduce(g)[0] == f


def test_compose_group_laws():
    for d in (-23, -47, -100, -84):
        elements, table, _ = class_group(d)
        p = principal_form(d)
        pi = elements.index(p)
        n = len(elements)
        for i in range(n):
            # identity and closure
            assert table[pi][i] == i and table[i][pi] == i
            # commutativity
            for j in range(n):
                assert table[i][j] == table[j][i]
            # inverse exists: conjugate class composes to principal
            a, b, c = elements[i]
            conj = reduce((a, -b, c))[0]
            assert compose(elements[i], conj) == p
        # associativity, spot-checked
        rng = random.Random(d)
        for _ in range(20):
            i, j, k = (rng.randrange(n) for _ in range(3))
            assert table[table[i][j]][k] == table[i][table[j][k]]


def test_compose_disc_mismatch():
    with pytest.raises(DiscriminantMismatch):
        compose((1, 0, 1), (1, 1, 6))


def test_class_group_structures():
    assert class_group(-23)[2] == (3,)
    assert class_group(-4)[2] == ()
    assert class_group(-3)[2] == ()
    assert class_group(-47)[2] == (5,)
    assert class_group(-84)[2] == (2, 2)
    assert class_group(-56)[2] == (4,)


def test_class_group_excludes_imprimitive():
    elements, _, structure = class_group(-100)
    assert (5, 0, 5) not in elements
    assert len(elements) == 2
    assert structure == (2,)


def test_represent():
    reps = represent((1, 0, 1), 25)
    assert len(reps) == 12
    assert all(x * x + y * y == 25 for x, y in reps)
    assert represent((1, 0, 1), 3) == []
    assert represent((1, 0, 1), 0) == [(0, 0)]
    assert represent((1, 0, 1), -4) == []
    with pytest.raises(UnsupportedDiscriminant):
        represent((1, 5, 1), 10)
    with pytest.raises(NotPositiveDefinite):
        represent((-1, 0, -1), 10)
