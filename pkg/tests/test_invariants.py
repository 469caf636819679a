import pytest

from zerofiber.groups import GroupSpec, build_group
from zerofiber.invariants import (
    fundamental_invariants,
    invariant_degrees,
    invariant_dim,
    invariant_ideal_basis,
    molien_coeffs,
    reynolds,
    zero_fiber_degree,
)
from zerofiber.poly2 import Poly2, from_int_terms


def S(t):
    return GroupSpec.parse(t)


def test_cyclic3_invariants():
    f = fundamental_invariants(S("cyclic:3"))
    assert f == (Poly2.x(3), Poly2.x() * Poly2.y(), Poly2.y(3))


def test_invariant_degrees():
    assert invariant_degrees(S("cyclic:5")) == (5, 2, 5)
    assert sorted(invariant_degrees(S("bd:2"))) == [4, 4, 6]
    assert sorted(invariant_degrees(S("bd:3"))) == [4, 6, 8]
    assert sorted(invariant_degrees(S("bt"))) == [6, 8, 12]
    assert sorted(invariant_degrees(S("bo"))) == [8, 12, 18]
    assert sorted(invariant_degrees(S("bi"))) == [12, 20, 30]


def test_bo_f2_and_bi_f1_as_printed():
    bo = fundamental_invariants(S("bo"))
    assert bo[1] == from_int_terms({(8, 0): 1, (4, 4): 14, (0, 8): 1})
    bi = fundamental_invariants(S("bi"))
    assert bi[0] == from_int_terms({(11, 1): 1, (6, 6): 11, (1, 11): -1})


def test_reynolds_fixes_invariants():
    g2 = build_group(S("cyclic:2"))
    assert reynolds(g2, Poly2.x(2)) == Poly2.x(2)
    for spec in ["bd:2", "bt"]:
        g = build_group(S(spec))
        for f in fundamental_invariants(S(spec)):
            assert reynolds(g, f) == f


def test_reynolds_kills_linear_forms():
    for spec in ["cyclic:2", "cyclic:5", "bd:2", "bt", "bo", "bi"]:
        g = build_group(S(spec))
        assert reynolds(g, Poly2.x()).is_zero()
        assert reynolds(g, Poly2.y()).is_zero()


def test_invariant_dim_cyclic3():
    g = build_group(S("cyclic:3"))
    assert invariant_dim(g, 2) == 1  # spanned by xy
    assert invariant_dim(g, 1) == 0
    assert invariant_dim(g, 3) == 2  # x^3, y^3


def test_molien_cyclic2():
    g = build_group(S("cyclic:2"))
    assert molien_coeffs(g, 5) == [1, 0, 3, 0, 5, 0]


def test_molien_bt_first_degrees():
    g = build_group(S("bt"))
    coeffs = molien_coeffs(g, 12)
    assert coeffs[0] == 1
    assert all(coeffs[d] == 0 for d in (1, 2, 3, 4, 5, 7, 9, 10, 11))
    assert coeffs[6] == 1 and coeffs[8] == 1 and coeffs[12] == 2


def test_molien_matches_reynolds_dims_small():
    for spec in ["cyclic:2", "cyclic:3", "bd:2"]:
        g = build_group(S(spec))
        coeffs = molien_coeffs(g, 10)
        for d in range(11):
            assert coeffs[d] == invariant_dim(g, d), (spec, d)


@pytest.mark.parametrize(
    "spec,degree",
    [
        ("cyclic:1", 1),
        ("cyclic:2", 3),
        ("cyclic:5", 9),
        ("bd:2", 15),
        ("bd:3", 23),
        ("bt", 47),
        ("bo", 95),
        ("bi", 239),
    ],
)
def test_zero_fiber_degrees(spec, degree):
    assert zero_fiber_degree(S(spec)) == degree


def test_initial_ideal_fixtures():
    assert set(invariant_ideal_basis(S("bt")).lead_monomials) == {
        (5, 1), (8, 0), (4, 5), (1, 9), (0, 12)}
    assert set(invariant_ideal_basis(S("bo")).lead_monomials) == {
        (8, 0), (6, 6), (4, 10), (2, 14), (1, 17), (0, 18)}
    assert set(invariant_ideal_basis(S("bi")).lead_monomials) == {
        (11, 1), (20, 0), (10, 11), (6, 16), (5, 21), (1, 26), (0, 30)}


def test_cyclic_standard_monomials_match_span():
    gb = invariant_ideal_basis(S("cyclic:4"))
    sm = set(gb.standard_monomials)
    expected = {(a, 0) for a in range(4)} | {(0, b) for b in range(1, 4)}
    assert sm == expected
