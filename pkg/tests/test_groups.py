import pytest

from zerofiber.cyclotomic import Cyc
from zerofiber.groups import (
    GroupSpec,
    build_group,
    builtin_generators,
    close,
    commutator_subgroup,
    mat_det2,
    resolve_subgroup,
)


def test_spec_parse_roundtrip():
    for text in ["cyclic:5", "bd:3", "bt", "bo", "bi"]:
        assert str(GroupSpec.parse(text)) == text
    with pytest.raises(ValueError):
        GroupSpec.parse("nope")


def test_cyclic_generator_is_papers_matrix():
    gens = builtin_generators(GroupSpec("cyclic", 3))
    (g,) = gens
    z = Cyc.zeta(3)
    assert g == (z, Cyc.zero(3), Cyc.zero(3), z ** 2)


def test_bd2_generators():
    g1, g2 = builtin_generators(GroupSpec("bd", 2))
    i = Cyc.zeta(4)
    zero = Cyc.zero(4)
    assert g1 == (i, zero, zero, -i)
    assert g2 == (zero, i, i, zero)


def test_bt_has_three_generators_incl_w3():
    gens = builtin_generators(GroupSpec("bt"))
    assert len(gens) == 3
    w3 = gens[2]
    i = Cyc.zeta(24, 6)
    half = Cyc.rational(1, 24) / 2
    s = (Cyc.one(24) + i) * half
    assert w3 == (s, s * i, s, -s * i)
    assert mat_det2(w3) == 1


@pytest.mark.parametrize(
    "spec,order",
    [
        ("cyclic:1", 1),
        ("cyclic:5", 5),
        ("bd:1", 4),
        ("bd:2", 8),
        ("bd:3", 12),
        ("bt", 24),
        ("bo", 48),
        ("bi", 120),
    ],
)
def test_closure_orders(spec, order):
    g = build_group(GroupSpec.parse(spec))
    assert g.order == order
    # all elements have det 1 and finite order dividing |G|
    for idx in range(g.order):
        assert order % g.element_order[idx] == 0
    assert mat_det2(g.elements[order - 1]) == 1


def test_class_sizes_sum():
    for spec in ["cyclic:4", "bd:2", "bd:3", "bt", "bo", "bi"]:
        g = build_group(GroupSpec.parse(spec))
        assert sum(len(c) for c in g.classes) == g.order
        assert g.classes[0] == (0,)


def test_class_counts():
    assert len(build_group(GroupSpec.parse("bd:2")).classes) == 5
    assert len(build_group(GroupSpec.parse("bt")).classes) == 7
    assert len(build_group(GroupSpec.parse("bo")).classes) == 8
    assert len(build_group(GroupSpec.parse("bi")).classes) == 9


def test_defining_trace_real_on_classes():
    for spec in ["bd:3", "bt", "bo", "bi"]:
        g = build_group(GroupSpec.parse(spec))
        for cls in g.classes:
            tr = g.trace(cls[0])
            assert tr.conj() == tr
            # constant on the class
            assert all(g.trace(i) == tr for i in cls)


def test_commutator_subgroups():
    bt = build_group(GroupSpec.parse("bt"))
    comm = resolve_subgroup(bt, "comm")
    assert comm.order == 8 and comm.index == 3

    for n in (2, 3, 4):
        bd = build_group(GroupSpec.parse(f"bd:{n}"))
        comm = resolve_subgroup(bd, "comm")
        assert comm.order == n and comm.index == 4

    bi = build_group(GroupSpec.parse("bi"))
    assert len(commutator_subgroup(bi)) == 120  # perfect


def test_commutator_times_abelianization():
    for spec in ["cyclic:6", "bd:2", "bd:3", "bt", "bo", "bi"]:
        g = build_group(GroupSpec.parse(spec))
        comm = commutator_subgroup(g)
        ab = g.order // len(comm)
        assert len(comm) * ab == g.order


def test_whole_and_cyc2():
    bd = build_group(GroupSpec.parse("bd:3"))
    whole = resolve_subgroup(bd, "whole")
    assert whole.index == 1
    cyc2 = resolve_subgroup(bd, "cyc2")
    assert cyc2.order == 6 and cyc2.index == 2
    with pytest.raises(ValueError):
        resolve_subgroup(build_group(GroupSpec.parse("bt")), "cyc2")


def test_explicit_gens_subgroup():
    bd = build_group(GroupSpec.parse("bd:2"))
    minus_one = next(i for i in range(8) if bd.element_order[i] == 2)
    sub = resolve_subgroup(bd, f"gens:{minus_one}")
    assert sub.order == 2


def test_nonnormal_subgroup_rejected():
    bt = build_group(GroupSpec.parse("bt"))
    # an order-4 cyclic subgroup of 2T is not normal
    idx = next(i for i in range(24) if bt.element_order[i] == 4)
    with pytest.raises(ValueError):
        resolve_subgroup(bt, f"gens:{idx}")


def test_mult_table_consistency():
    g = build_group(GroupSpec.parse("bd:2"))
    for a in range(g.order):
        assert g.mult[a][g.inv[a]] == 0
        assert g.mult[0][a] == a
        assert g.mult[a][0] == a


def test_closure_cap():
    from zerofiber.groups import ClosureCapError

    gens = builtin_generators(GroupSpec("bi"))
    with pytest.raises(ClosureCapError):
        close(gens, cap=50)
