import random

from zerofiber.cyclotomic import Cyc
from zerofiber.linalg import (
    identity,
    kernel_basis,
    mat_mul,
    quat_matrix_embed,
    quat_rank,
    quat_rank_direct,
    quat_rref_key,
    rank,
    rref,
    subspace_intersection,
)
from zerofiber.quaternion import Quaternion


def test_identity_full_rank():
    m = identity(4)
    assert rank(m) == 4
    assert kernel_basis(m) == []


def test_zero_matrix():
    z = Cyc.zero(1)
    m = tuple(tuple(z for _ in range(3)) for _ in range(3))
    assert rank(m) == 0
    assert len(kernel_basis(m)) == 3


def test_g_minus_one_for_order_three_diagonal():
    # g = diag(zeta_3, zeta_3^-1): g - 1 has rank 2, trivial kernel
    z = Cyc.zeta(3)
    zero, one = Cyc.zero(3), Cyc.one(3)
    g = ((z - one, zero), (zero, z.inverse() - one))
    assert rank(g) == 2
    assert kernel_basis(g) == []


def test_kernel_vectors_verified_by_multiplication():
    one = Cyc.one(1)
    two = Cyc.rational(2)
    m = ((one, two, one), (one, two, one))
    kb = kernel_basis(m)
    assert len(kb) == 2
    for v in kb:
        col = tuple((x,) for x in v)
        out = mat_mul(m, col)
        assert all(e.is_zero() for row in out for e in row)


def test_rank_nullity():
    rng = random.Random(3)
    for _ in range(50):
        rowsn = rng.randint(1, 4)
        colsn = rng.randint(1, 4)
        m = tuple(
            tuple(Cyc(4, (rng.randint(-2, 2), rng.randint(-2, 2)), 1) for _ in range(colsn))
            for _ in range(rowsn)
        )
        assert rank(m) + len(kernel_basis(m)) == colsn


def test_subspace_intersection():
    one, zero = Cyc.one(1), Cyc.zero(1)
    # span{e1, e2} and span{e2, e3} in Q^3 intersect in span{e2}
    a = ((one, zero, zero), (zero, one, zero))
    b = ((zero, one, zero), (zero, zero, one))
    inter = subspace_intersection(a, b)
    assert len(inter) == 1
    assert inter[0] == (zero, one, zero)


def test_quat_embedding_is_homomorphism():
    rng = random.Random(5)

    def rand_qmat(n):
        return tuple(
            tuple(
                Quaternion(
                    Cyc(4, (rng.randint(-2, 2), rng.randint(-2, 2)), 1),
                    Cyc(4, (rng.randint(-2, 2), rng.randint(-2, 2)), 1),
                )
                for _ in range(n)
            )
            for _ in range(n)
        )

    def qmat_mul(a, b):
        n = len(a)
        return tuple(
            tuple(
                sum((a[i][t] * b[t][j] for t in range(1, n)), a[i][0] * b[0][j])
                for j in range(n)
            )
            for i in range(n)
        )

    for _ in range(40):
        a, b = rand_qmat(2), rand_qmat(2)
        lhs = quat_matrix_embed(qmat_mul(a, b))
        rhs = mat_mul(quat_matrix_embed(a), quat_matrix_embed(b))
        assert lhs == rhs


def test_quat_rank_matches_direct_elimination():
    rng = random.Random(9)
    for _ in range(60):
        n = rng.randint(1, 3)
        qm = tuple(
            tuple(
                Quaternion(
                    Cyc(4, (rng.randint(-2, 2), rng.randint(-2, 2)), 1),
                    Cyc(4, (rng.randint(-2, 2), rng.randint(-2, 2)), 1),
                )
                for _ in range(n)
            )
            for _ in range(n)
        )
        assert quat_rank(qm) == quat_rank_direct(qm)


def test_quat_rref_key_detects_equal_row_spaces():
    one4 = Quaternion.one(4)
    i = Quaternion.basis("i", 4)
    zero = Quaternion.zero(4)
    rows1 = ((one4, i), (zero, zero))
    rows2 = ((i, i * i),)  # i * (1, i)
    assert quat_rref_key(rows1) == quat_rref_key(rows2)
    rows3 = ((one4, zero),)
    assert quat_rref_key(rows1) != quat_rref_key(rows3)


def test_rref_shape():
    one = Cyc.one(1)
    two = Cyc.rational(2)
    m = ((two, two), (one, one))
    red, pivots = rref(m)
    assert pivots == [0]
    assert red[0] == (one, one)
