import pytest
from hypothesis import assume, given, strategies as st

from p2tensor.kronecker import (
    KroneckerShape,
    decompose_general,
    euler_form,
    exceptional_orbit,
    expected_dimension,
    general_hom_ext,
    is_exceptional_vector,
    parse_shape,
    semistable_exists,
)

K = lambda b, a, n=3: KroneckerShape(n, b, a)  # noqa: E731


def test_orbit_for_three_arrows():
    assert [s.vector for s in exceptional_orbit(3, 6)] == [(0, 1), (1, 3), (3, 8), (8, 21), (21, 55), (55, 144)]
    assert [s.vector for s in exceptional_orbit(4, 4)] == [(0, 1), (1, 4), (4, 15), (15, 56)]


@pytest.mark.parametrize(
    "shape,expected",
    [
        (K(1, 4), {(0, 1): 1, (1, 3): 1}),
        (K(4, 11), {(1, 3): 1, (3, 8): 1}),
        (K(2, 6), {(1, 3): 2}),
        (K(5, 6), {(5, 6): 1}),
        (K(0, 3), {(0, 1): 3}),
        (K(3, 0), {(1, 0): 3}),
        (K(7, 2), {(3, 1): 2, (1, 0): 1}),
    ],
)
def test_general_decompositions(shape, expected):
    assert decompose_general(shape).as_dict() == expected


@pytest.mark.parametrize(
    "f,e,expected",
    [
        (K(4, 11), K(1, 4), (1, 1)),
        (K(2, 1), K(1, 3), (0, 13)),
        (K(1, 3), K(3, 8), (3, 0)),
        (K(0, 1), K(1, 0), (0, 0)),
        (K(1, 0), K(0, 1), (0, 3)),
    ],
)
def test_hom_ext_values(f, e, expected):
    assert general_hom_ext(f, e) == expected


def test_shape_validation_and_parse():
    assert parse_shape("3:5,6") == K(5, 6)
    assert str(K(5, 6)) == "3:5,6"
    with pytest.raises(ValueError):
        parse_shape("3-5-6")
    with pytest.raises(ValueError):
        KroneckerShape(2, 1, 1)
    with pytest.raises(ValueError):
        K(0, 0)
    with pytest.raises(ValueError):
        euler_form(K(1, 1), KroneckerShape(4, 1, 1))


def test_semistability_boundary():
    assert semistable_exists(K(1, 3)) and is_exceptional_vector(K(1, 3))
    assert semistable_exists(K(1, 1)) and expected_dimension(K(1, 1)) == 2
    assert not semistable_exists(K(1, 4))
    assert not semistable_exists(K(2, 6))


arrows = st.integers(3, 6)


@given(arrows, st.integers(1, 12))
def test_orbit_vectors_exceptional_and_orthogonal(n, k):
    orbit = exceptional_orbit(n, k + 1)
    for s in orbit:
        assert is_exceptional_vector(s)
    for s, t in zip(orbit, orbit[1:]):
        assert euler_form(t, s) == 0
        assert euler_form(s, t) == -(n * s.b * t.a - s.b * t.b - s.a * t.a)


@given(arrows, st.integers(0, 40), st.integers(0, 40))
def test_decomposition_totals(n, b, a):
    assume(b or a)
    s = KroneckerShape(n, b, a)
    d = decompose_general(s)
    assert d.total() == (b, a)
    if len(d.summands) == 2:
        (x, _), (y, _) = d.summands
        assert is_exceptional_vector(x) and is_exceptional_vector(y)
        # canonical decompositions are ext-orthogonal
        assert general_hom_ext(x, y)[1] == 0 or general_hom_ext(y, x)[1] == 0


@given(arrows, *[st.integers(0, 15)] * 4)
def test_euler_bilinear(n, b1, a1, b2, a2):
    assume((b1 or a1) and (b2 or a2))
    f, e = KroneckerShape(n, b1, a1), KroneckerShape(n, b2, a2)
    hom, ext = general_hom_ext(f, e)
    assert hom - ext == euler_form(f, e)
    assert min(hom, ext) >= 0
    two = KroneckerShape(n, 2 * b1, 2 * a1)
    assert euler_form(two, e) == 2 * euler_form(f, e)
