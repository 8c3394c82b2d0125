from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from gmdeg.chow import (
    EXPECTED, ChernVector, ChowClass, ChowMismatch, SheafClass, TANGENT_P3, char_of_twist,
    char_to_chern, chern_to_char, chi_line_bundle, contact_curve_invariants, contact_pipeline,
    euler_characteristic, line_bundle, sequence_combine, tangent_class, todd, todd_p3,
    verify_records,
)

Fr = Fraction
h = ChowClass.h()
fracs = st.fractions(min_value=-50, max_value=50, max_denominator=12)
classes = st.lists(fracs, min_size=4, max_size=4).map(ChowClass)
chern_vectors = st.builds(ChernVector, st.integers(0, 6), fracs, fracs, fracs)


# -- ring structure -------------------------------------------------------------

def test_h_fourth_vanishes():
    assert h ** 3 == ChowClass([0, 0, 0, 1])
    assert h ** 4 == ChowClass()
    assert (1 + h) ** 5 == ChowClass([1, 5, 10, 10])


@given(classes, classes, classes)
@settings(max_examples=80)
def test_ring_axioms(a, b, c):
    one = ChowClass.one()
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * one == a and a + ChowClass() == a
    assert a - a == ChowClass()


def test_str_format():
    assert str(EXPECTED["ch(T)"]) == "3 + 4*h + 2*h^2 + 2/3*h^3"
    assert str(EXPECTED["ch(N^v)"]) == "2 - 2*h + 2/3*h^3"


# -- Chern character ------------------------------------------------------------

def test_tangent_chern_character():
    assert chern_to_char(TANGENT_P3).ch == ChowClass([3, 4, 2, Fr(2, 3)])
    assert tangent_class().ch == ChowClass([3, 4, 2, Fr(2, 3)])


def test_trivial_line_bundle():
    assert chern_to_char(ChernVector(1)).ch == ChowClass.one()
    assert char_to_chern(SheafClass(ChowClass.one())) == ChernVector(1)


@pytest.mark.parametrize("m", range(-6, 7))
def test_line_bundle_exponential(m):
    want = ChowClass([1, m, Fr(m * m, 2), Fr(m ** 3, 6)])
    assert chern_to_char(ChernVector(1, m)).ch == want
    assert char_of_twist(line_bundle(0), m).ch == want


def test_char_to_chern_contact_ideal():
    v = char_to_chern(SheafClass(EXPECTED["ch(I_C(a))"]))
    assert (v.rank, v.c1, v.c2) == (1, 5, 12)


@given(chern_vectors)
@settings(max_examples=100)
def test_chern_round_trip(v):
    assert char_to_chern(chern_to_char(v)) == v


@given(classes.filter(lambda c: c[0].denominator == 1 and c[0] >= 0))
@settings(max_examples=60)
def test_char_round_trip(c):
    s = SheafClass(c)
    assert chern_to_char(char_to_chern(s)).ch == c


# -- sequences and twists -------------------------------------------------------

def test_sequence_e():
    omega2 = sequence_combine([(1, 4 * line_bundle(1)), (-1, line_bundle(2))])
    assert omega2.ch == ChowClass([3, 2, 0, Fr(-2, 3)])
    E = sequence_combine([(1, line_bundle(1)), (1, omega2), (-1, line_bundle(0))])
    assert E.ch == ChowClass([3, 3, Fr(1, 2), Fr(-1, 2)])


def test_sequence_n_dual():
    T2 = char_of_twist(tangent_class(), -2)
    assert T2.ch == ChowClass([3, -2, 0, Fr(2, 3)])
    assert sequence_combine([(1, T2), (-1, line_bundle(0))]).ch == ChowClass([2, -2, 0, Fr(2, 3)])


@given(classes)
def test_self_difference(c):
    s = SheafClass(c)
    assert sequence_combine([(1, s), (-1, s)]).ch == ChowClass()


@given(classes, classes)
def test_additivity(a, b):
    s1, s2 = SheafClass(a), SheafClass(b)
    assert sequence_combine([(1, s1), (1, s2)]) == s1 + s2
    # split sequence 0 -> s1 -> s1 + s2 -> s2 -> 0
    assert sequence_combine([(1, s1), (-1, s1 + s2), (1, s2)]).ch == ChowClass()


def test_bad_sign():
    with pytest.raises(ValueError):
        sequence_combine([(2, line_bundle(0))])


def test_untwist_contact_ideal():
    s = char_of_twist(SheafClass(EXPECTED["ch(I_C(a))"]), -5)
    assert s.ch[1] == 0
    assert s.ch == ChowClass([1, 0, -12, 38])


@given(classes, st.integers(-8, 8), st.integers(-8, 8))
def test_twist_group_law(c, m, n):
    s = SheafClass(c)
    assert char_of_twist(s, 0) == s
    assert char_of_twist(char_of_twist(s, m), -m) == s
    assert char_of_twist(char_of_twist(s, m), n) == char_of_twist(s, m + n)


# -- Todd class and Riemann-Roch -----------------------------------------------

def test_todd_p3():
    assert todd_p3() == ChowClass([1, 2, Fr(11, 6), 1])
    assert todd(ChernVector(1)) == ChowClass.one()
    assert todd(TANGENT_P3)[3] == Fr(4 * 6, 24)


def test_euler_characteristic_examples():
    assert euler_characteristic(line_bundle(0)) == 1
    assert line_bundle(-4).ch == ChowClass([1, -4, 8, Fr(-32, 3)])
    assert euler_characteristic(line_bundle(-4)) == -1


@pytest.mark.parametrize("m", range(-10, 11))
def test_hrr_matches_binomial(m):
    assert euler_characteristic(line_bundle(m)) == chi_line_bundle(m)
    # the oracle itself: (m+1)(m+2)(m+3)/6 as a polynomial identity
    assert chi_line_bundle(m) == Fr((m + 1) * (m + 2) * (m + 3), 6)


def test_binomial_oracle_nonnegative_range():
    assert [chi_line_bundle(m) for m in range(4)] == [comb(m + 3, 3) for m in range(4)]


# -- the contact curve --------------------------------------------------------

def test_pipeline_reproduces_every_class():
    stages = dict(contact_pipeline())
    for label, want in EXPECTED.items():
        assert stages[label] == want, label


def test_contact_curve_invariants():
    inv = contact_curve_invariants()
    assert (inv.twist, inv.degree, inv.genus) == (5, 12, 15)


def test_structure_sheaf_of_curve():
    O_C = sequence_combine([(1, line_bundle(5)), (-1, SheafClass(EXPECTED["ch(I_C(a))"]))])
    assert O_C.ch == ChowClass([0, 0, 12, 22])
    assert char_to_chern(O_C).c2 == -12


def test_mismatch_names_the_class(monkeypatch):
    import gmdeg.chow as chow
    bad = dict(EXPECTED, **{"ch(E)": ChowClass([3, 3, 0, 0])})
    monkeypatch.setattr(chow, "EXPECTED", bad)
    with pytest.raises(ChowMismatch, match=r"ch\(E\)"):
        chow.contact_curve_invariants()


def test_verify_records():
    recs = verify_records()
    assert all(r["status"] == "PASS" for r in recs)
    assert {r["label"] for r in recs} >= set(EXPECTED)
