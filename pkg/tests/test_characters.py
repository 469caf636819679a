from fractions import Fraction

import pytest

from zerofiber.cyclotomic import Cyc
from zerofiber.characters import (
    character_table,
    defining_character,
    inner_product,
    kernel_contains,
    linear_characters,
    table_for,
    value_at_element,
)
from zerofiber.groups import GroupSpec, build_group, resolve_subgroup

ALL_SPECS = ["cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:6",
             "bd:1", "bd:2", "bd:3", "bd:4", "bt", "bo", "bi"]


@pytest.mark.parametrize("spec", ALL_SPECS)
def test_tables_validate(spec):
    # character_table validates orthogonality, degree sums and integrality on
    # construction; reaching here means the table is certified
    chars = character_table(GroupSpec.parse(spec))
    g = build_group(GroupSpec.parse(spec))
    assert len(chars) == len(g.classes)
    assert chars[0].degree == 1


def test_cyclic4_characters():
    g = build_group(GroupSpec.parse("cyclic:4"))
    chars = character_table(GroupSpec.parse("cyclic:4"))
    assert len(chars) == 4
    assert all(c.degree == 1 for c in chars)
    w = g.gen_indices[0]
    vals = sorted(str(value_at_element(g, c, w)) for c in chars)
    i = Cyc.zeta(4)
    assert vals == sorted(str(v) for v in [Cyc.one(4), i, -Cyc.one(4), -i])


def test_bd2_degrees():
    chars = character_table(GroupSpec.parse("bd:2"))
    degs = sorted(int(c.degree.as_rational()) for c in chars)
    assert degs == [1, 1, 1, 1, 2]


def test_bi_degrees_match_e8_delta():
    chars = character_table(GroupSpec.parse("bi"))
    degs = sorted(int(c.degree.as_rational()) for c in chars)
    assert degs == [1, 2, 2, 3, 3, 4, 4, 5, 6]


def test_bo_degrees():
    chars = character_table(GroupSpec.parse("bo"))
    degs = sorted(int(c.degree.as_rational()) for c in chars)
    assert degs == [1, 1, 2, 2, 2, 3, 3, 4]


def test_linear_character_counts():
    assert len(linear_characters(build_group(GroupSpec.parse("bi")))) == 1
    assert len(linear_characters(build_group(GroupSpec.parse("bt")))) == 3
    assert len(linear_characters(build_group(GroupSpec.parse("bo")))) == 2
    for ell in (2, 3, 5):
        assert len(linear_characters(build_group(GroupSpec.parse(f"cyclic:{ell}")))) == ell
    for n in (2, 3):
        assert len(linear_characters(build_group(GroupSpec.parse(f"bd:{n}")))) == 4


def test_defining_character_real_and_degree_two():
    for spec in ALL_SPECS:
        g = build_group(GroupSpec.parse(spec))
        chi = defining_character(g)
        assert chi.degree == 2
        assert chi.conj().values == chi.values


def test_kernel_contains():
    g = build_group(GroupSpec.parse("bt"))
    comm = resolve_subgroup(g, "comm")
    lins = linear_characters(g)
    # every linear character kills the commutator subgroup
    assert all(kernel_contains(g, chi, comm) for chi in lins)
    # only the trivial one kills the whole group
    whole = resolve_subgroup(g, "whole")
    assert sum(kernel_contains(g, chi, whole) for chi in lins) == 1


def test_restriction_distinguishes():
    g = build_group(GroupSpec.parse("bd:2"))
    cyc2 = resolve_subgroup(g, "cyc2")
    lins = linear_characters(g)
    trivial_on = [chi for chi in lins if kernel_contains(g, chi, cyc2)]
    assert len(trivial_on) == 2  # index-2 subgroup


def test_inner_products_are_exact_rationals():
    g = build_group(GroupSpec.parse("bo"))
    chars = character_table(GroupSpec.parse("bo"))
    for a in chars:
        for b in chars:
            ip = inner_product(g, a, b)
            assert isinstance(ip, Fraction)
            assert ip == (1 if a.values == b.values else 0)


def test_table_for_raw_abelian_group():
    from zerofiber.groups import builtin_generators, close

    gens = builtin_generators(GroupSpec("cyclic", 5))
    g = close(gens)
    chars = table_for(g)
    assert len(chars) == 5


def test_table_for_raw_nonabelian_rejected():
    from zerofiber.groups import builtin_generators, close

    gens = builtin_generators(GroupSpec("bd", 2))
    g = close(gens)
    g.spec = None
    with pytest.raises(ValueError):
        table_for(g)


def test_sym2_of_defining_is_the_three_dim_for_bt():
    # frozen cross-check of the stored 3-dim row: Sym^2 chi_V values
    g = build_group(GroupSpec.parse("bt"))
    chi_v = defining_character(g)
    vals = []
    for cls in g.classes:
        rep = cls[0]
        sq = g.power(rep, 2)
        v = (chi_v.values[g.class_of[rep]] ** 2 + chi_v.values[g.class_of[sq]]) * Fraction(1, 2)
        vals.append(v)
    chars = character_table(GroupSpec.parse("bt"))
    assert any(tuple(vals) == c.values for c in chars)
