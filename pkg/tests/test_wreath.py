import random
from fractions import Fraction

import pytest

from zerofiber.groups import GroupSpec, build_group, resolve_subgroup
from zerofiber.wreath import (
    WreathContext,
    appendix_checks,
    hyperplanes,
    numerology,
    reflections,
)


def ctx_of(gamma: str, delta: str, n: int) -> WreathContext:
    g = build_group(GroupSpec.parse(gamma))
    return WreathContext(g, resolve_subgroup(g, delta), n)


def test_wreath_orders():
    assert ctx_of("cyclic:2", "whole", 2).order == 8
    assert ctx_of("bd:2", "cyc2", 2).order == 64
    # W_1(Gamma, Delta) = Delta
    c = ctx_of("bd:3", "comm", 1)
    assert c.order == 3
    assert sorted(e.gammas[0] for e in c.elements()) == sorted(c.sub.indices)


def test_iterator_counts_match_formula():
    for gamma, delta, n in [
        ("cyclic:3", "whole", 2),
        ("cyclic:2", "whole", 3),
        ("bd:2", "comm", 2),
        ("bd:2", "cyc2", 2),
    ]:
        c = ctx_of(gamma, delta, n)
        elems = list(c.raw_elements())
        assert len(elems) == c.order
        assert len(set(elems)) == c.order


def test_structural_codim_equals_kernel_codim_bruteforce():
    # the structural criterion is exactly half the complex codimension,
    # element by element, on groups small enough to brute force
    for gamma, delta, n in [("cyclic:2", "whole", 2), ("cyclic:3", "whole", 2),
                            ("bd:1", "whole", 2), ("cyclic:2", "whole", 3)]:
        c = ctx_of(gamma, delta, n)
        for el in c.elements():
            assert 2 * c.structural_fix_codim(el) == c.complex_codim_of_fix(el)


@pytest.mark.parametrize(
    "gamma,delta,n,expected_N",
    [
        ("cyclic:2", "whole", 2, 4),       # 1*2 + 2*1
        ("bd:2", "cyc2", 2, 14),           # 8 + 2*3
        ("cyclic:5", "whole", 1, 4),       # n=1: |Delta|-1
        ("bt", "comm", 2, 38),             # 24 + 2*7
        ("cyclic:3", "whole", 3, 15),      # 3*3 + 3*2
    ],
)
def test_reflection_counts(gamma, delta, n, expected_N):
    c = ctx_of(gamma, delta, n)
    assert len(reflections(c)) == expected_N


def test_reflection_types_match_shape():
    c = ctx_of("bd:2", "whole", 2)
    for r in reflections(c):
        el = r.element
        if r.kind == "b":
            assert el.perm == (0, 1)
            assert sum(1 for g in el.gammas if g != 0) == 1
        else:
            assert el.perm == (1, 0)
            assert c.group.mult[el.gammas[0]][el.gammas[1]] == 0


def test_hyperplane_counts():
    # n=1: single zero hyperplane
    c = ctx_of("cyclic:4", "whole", 1)
    refl = reflections(c)
    assert len(hyperplanes(c, refl)) == 1

    c = ctx_of("cyclic:2", "whole", 2)
    assert len(hyperplanes(c, reflections(c))) == 4  # 1*2 + 2

    c = ctx_of("bd:2", "whole", 2)
    assert len(hyperplanes(c, reflections(c))) == 10  # C(2,2)*8 + 2


def test_hyperplane_dedup_order_invariant():
    c = ctx_of("cyclic:3", "whole", 2)
    refl = reflections(c)
    base = {h.key for h in hyperplanes(c, refl)}
    rng = random.Random(42)
    for _ in range(100):
        shuffled = refl[:]
        rng.shuffle(shuffled)
        assert {h.key for h in hyperplanes(c, shuffled)} == base


def test_stabilizer_orders():
    c = ctx_of("bd:2", "cyc2", 2)
    refl = reflections(c)
    planes = hyperplanes(c, refl)
    for h in planes:
        kinds = {refl[i].kind for i in h.reflection_ids}
        if kinds == {"a"}:
            assert h.stabilizer_order == 2
        else:
            assert h.stabilizer_order == c.sub.order


def test_numerology_n1():
    for ell in (2, 3, 5):
        c = ctx_of(f"cyclic:{ell}", "whole", 1)
        rep = numerology(c)
        assert rep.N == ell - 1 and rep.Nstar == 1
        assert rep.g == 2 * ell - 2 and rep.h == ell and rep.k == 2
        assert rep.integral == {"g": True, "h": True, "k": True}


def test_numerology_examples():
    rep = numerology(ctx_of("bd:2", "whole", 2))
    assert rep.g == 8 + 2 * 7 == 22

    rep = numerology(ctx_of("bt", "comm", 2))
    assert rep.g == 24 + 2 * 7 == 38
    assert rep.integral["g"] and rep.integral["h"] and rep.integral["k"]


def test_g_h_k_relation_and_order_two_equality():
    # g = h = k iff every reflection has order 2
    c = ctx_of("cyclic:2", "whole", 2)
    rep = numerology(c)
    assert rep.g + rep.k == 2 * rep.h
    orders = set()
    for r in reflections(c):
        el = r.element
        # order of the monomial element: brute force via matrix powers
        codim = c.structural_fix_codim(el)
        assert codim == 1
        mat = c.quaternion_matrix(el)
        from zerofiber.linalg import quat_matrix_embed, identity, mat_mul

        emb = quat_matrix_embed(mat)
        acc = emb
        o = 1
        ident = identity(4, c.group.conductor)
        while acc != ident:
            acc = mat_mul(acc, emb)
            o += 1
        orders.add(o)
    if orders == {2}:
        assert rep.g == rep.h == rep.k
    else:
        assert rep.g > rep.h > rep.k


def test_reducible_flagged_for_symmetric_group():
    # W_2(1,1) = S_2 acts reducibly on H^2
    c = ctx_of("cyclic:1", "whole", 2)
    rep = numerology(c)
    assert not rep.irreducible
    # nontrivial Gamma gives an irreducible module
    assert numerology(ctx_of("cyclic:2", "whole", 2)).irreducible


def test_appendix_n1():
    for ell in (2, 3, 4):
        c = ctx_of(f"cyclic:{ell}", "whole", 1)
        rep = appendix_checks(c)
        assert rep.trace_identity == "pass"
        assert rep.f_operator == "pass"
        assert rep.pairing_sum == "pass"
        assert rep.k_identity == "pass"


def test_appendix_cyclic2_n2():
    rep = appendix_checks(ctx_of("cyclic:2", "whole", 2))
    assert rep.numerology.k == 4
    assert rep.trace_identity == rep.f_operator == rep.pairing_sum == rep.k_identity == "pass"


def test_appendix_bd_and_bt():
    for gamma, delta, n in [("bd:2", "cyc2", 2), ("bd:2", "comm", 2), ("bt", "comm", 2)]:
        rep = appendix_checks(ctx_of(gamma, delta, n))
        assert rep.k_identity == "pass"


def test_appendix_cap_skips():
    rep = appendix_checks(ctx_of("bi", "whole", 2))
    assert rep.trace_identity == "pass"
    assert rep.f_operator == "skipped(cap)"
