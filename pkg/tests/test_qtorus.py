import pytest
from hypothesis import given, settings, strategies as st

from skeincluster.coeffs import LaurentSA, RationalSA
from skeincluster.qtorus import (
    ContractError,
    GradeFunctional,
    QTElement,
    SkewLattice,
    commutator_power,
    qt_inverse,
    truncate,
)

LAT3 = SkewLattice(3, ((0, 1, -2), (-1, 0, 1), (2, -1, 0)))
W3 = GradeFunctional((1, 1, 1))
CUT = 3

coeffs = st.sampled_from([RationalSA(1), RationalSA(-2), RationalSA(LaurentSA.s(1)),
                          RationalSA(1, LaurentSA(1) - LaurentSA.q(-1)), RationalSA(LaurentSA.a(1) + 3)])
vecs = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)).filter(lambda v: sum(v) <= CUT)
elements = st.dictionaries(vecs, coeffs, max_size=4).map(lambda d: QTElement(LAT3, W3, CUT, d))


@settings(max_examples=60)
@given(elements, elements, elements)
def test_associative_and_distributive(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(vecs, vecs)
def test_monomial_commutation(u, v):
    big = QTElement.monomial(LAT3, W3, 12, u)
    other = QTElement.monomial(LAT3, W3, 12, v)
    k = commutator_power(LAT3, u, v)
    assert big * other == (other * big).scale(LaurentSA.q(k))


@given(vecs, vecs)
def test_monomial_twist(u, v):
    prod = QTElement.monomial(LAT3, W3, 12, u) * QTElement.monomial(LAT3, W3, 12, v)
    w = tuple(a + b for a, b in zip(u, v))
    assert prod.terms == {w: RationalSA(LaurentSA.s(LAT3.pairing(u, v)))}


@settings(max_examples=60)
@given(elements, coeffs)
def test_inverse_two_sided(x, lead):
    A = x - x.graded_part(0) + QTElement.one(LAT3, W3, CUT).scale(lead)
    B = qt_inverse(A)
    one = QTElement.one(LAT3, W3, CUT)
    assert A * B == one
    assert B * A == one


def test_inverse_with_monomial_lead():
    lat = SkewLattice.standard()
    w = GradeFunctional((1, 0))
    A = QTElement(lat, w, 4, {(0, 1): LaurentSA.s(1), (1, 0): 1, (2, -1): 5})
    B = qt_inverse(A)
    assert A * B == QTElement.one(lat, w, 4)


def test_inverse_needs_unit_lead():
    A = QTElement(SkewLattice.standard(), GradeFunctional((1, 1)), 3, {(1, 0): 1})
    with pytest.raises(ZeroDivisionError):
        qt_inverse(A)


def test_truncation_drops_high_grade():
    A = QTElement(SkewLattice.standard(), GradeFunctional((1, 1)), 2, {(3, 0): 1, (1, 1): 2})
    assert A.terms == {(1, 1): RationalSA(2)}
    assert truncate(A, 1).is_zero()


def test_negative_grade_rejected():
    with pytest.raises(ContractError):
        QTElement(SkewLattice.standard(), GradeFunctional((1, 1)), 2, {(-1, 0): 1})


def test_incompatible_tori_rejected():
    a = QTElement.one(SkewLattice.standard(), GradeFunctional((1, 1)), 2)
    b = QTElement.one(SkewLattice.standard(), GradeFunctional((1, 1)), 3)
    with pytest.raises(ContractError):
        a * b


def test_lattice_validation():
    with pytest.raises(ValueError):
        SkewLattice(2, ((0, 1), (1, 0)))
    with pytest.raises(ValueError):
        SkewLattice(2, ((1, 0), (0, 0)))


def test_standard_relation_xy_q_yx():
    lat, w = SkewLattice.standard(), GradeFunctional((1, 1))
    x = QTElement.monomial(lat, w, 4, (1, 0))
    y = QTElement.monomial(lat, w, 4, (0, 1))
    assert (x * y - (y * x).scale(LaurentSA.q(1))).is_zero()


@given(elements)
def test_json_roundtrip(x):
    assert QTElement.from_json(x.to_json()) == x


def test_text_form():
    lat, w = SkewLattice.standard(), GradeFunctional((1, 1))
    assert str(QTElement.one(lat, w, 2)) == "1"
    assert str(QTElement.zero(lat, w, 2)) == "0"
