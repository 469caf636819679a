import random
from fractions import Fraction

from zerofiber.cyclotomic import Cyc
from zerofiber.quaternion import (
    Quaternion,
    hermitian_form,
    quat_from_matrix,
    split_form,
)

M = 4


def q_basis():
    return {n: Quaternion.basis(n, M) for n in "1ijk"}


def test_basis_relations():
    b = q_basis()
    one, i, j, k = b["1"], b["i"], b["j"], b["k"]
    minus_one = -one
    assert i * i == minus_one
    assert j * j == minus_one
    assert k * k == minus_one
    assert i * j == k
    assert j * k == i
    assert k * i == j
    assert i * j * k == minus_one
    assert j * i == -k


def test_conj_and_norm():
    j = Quaternion.basis("j", M)
    q = Quaternion.one(M) + j * 2
    assert q.conj() == Quaternion.one(M) - j * 2
    assert q.norm_sq() == 5


def test_norm_multiplicative():
    i, j = Quaternion.basis("i", M), Quaternion.basis("j", M)
    q1 = Quaternion.one(M) + i
    q2 = j
    assert (q1 * q2).norm_sq() == q1.norm_sq() * q2.norm_sq() == 2


def test_conj_antiautomorphism_randomized():
    rng = random.Random(7)

    def rand_quat():
        return Quaternion(
            Cyc(M, (rng.randint(-4, 4), rng.randint(-4, 4)), rng.randint(1, 3)),
            Cyc(M, (rng.randint(-4, 4), rng.randint(-4, 4)), rng.randint(1, 3)),
        )

    for _ in range(100):
        a, b = rand_quat(), rand_quat()
        assert (a * b).conj() == b.conj() * a.conj()
        assert a.conj().conj() == a
        assert a.norm_sq() >= 0
        if not a.is_zero():
            assert a * a.inverse() == Quaternion.one(M)


def test_hermitian_form_basics():
    one, zero = Quaternion.one(M), Quaternion.zero(M)
    e1 = (one, zero)
    e2 = (zero, one)
    assert hermitian_form(e1, e1) == one
    assert hermitian_form(e1, e2) == zero
    i, j, k = (Quaternion.basis(n, M) for n in "ijk")
    x = (j, zero)
    y = (i, zero)
    # conj(j) * i = -j*i = k
    assert hermitian_form(x, y) == k


def test_hermitian_symmetry_randomized():
    rng = random.Random(11)

    def rand_vec(n):
        return tuple(
            Quaternion(
                Cyc(M, (rng.randint(-3, 3), rng.randint(-3, 3)), 1),
                Cyc(M, (rng.randint(-3, 3), rng.randint(-3, 3)), 1),
            )
            for _ in range(n)
        )

    for _ in range(100):
        x, y = rand_vec(3), rand_vec(3)
        assert hermitian_form(y, x) == hermitian_form(x, y).conj()
        xx = hermitian_form(x, x)
        assert xx.z2.is_zero() and xx.z1.is_rational() and xx.z1.as_rational() >= 0


def test_split_form():
    one, zero = Quaternion.one(M), Quaternion.zero(M)
    j = Quaternion.basis("j", M)
    e1 = (one, zero)
    h, s = split_form(e1, e1)
    assert h == 1 and s == 0
    x, y = (one, zero), (j, zero)
    h, s = split_form(x, y)
    assert h == 0 and s == 1
    # antisymmetry of the symplectic part
    assert split_form(y, x)[1] == -1


def test_split_form_reassembles_and_paper_identity():
    rng = random.Random(13)

    def rand_vec(n):
        return tuple(
            Quaternion(
                Cyc(M, (rng.randint(-3, 3), rng.randint(-3, 3)), rng.randint(1, 2)),
                Cyc(M, (rng.randint(-3, 3), rng.randint(-3, 3)), rng.randint(1, 2)),
            )
            for _ in range(n)
        )

    j = Quaternion.basis("j", M)
    for _ in range(100):
        x, y = rand_vec(2), rand_vec(2)
        h, s = split_form(x, y)
        q = hermitian_form(x, y)
        assert q.z1 == h and q.z2 == s
        # <v1,v2>' = conj(<v1, v2*j>)
        yj = tuple(v * j for v in y)
        assert h == split_form(x, yj)[1].conj()


def test_quat_from_matrix():
    i = Cyc.zeta(4)
    w2 = (Cyc.zero(4), i, i, Cyc.zero(4))  # [[0, i], [i, 0]]
    q = quat_from_matrix(w2)
    assert q == -Quaternion.basis("k", 4)


def test_symplectic_part_bilinear_alternating():
    rng = random.Random(17)

    def rand_vec(n):
        return tuple(
            Quaternion(Cyc(M, (rng.randint(-3, 3), rng.randint(-3, 3)), 1),
                       Cyc(M, (rng.randint(-3, 3), rng.randint(-3, 3)), 1))
            for _ in range(n)
        )

    for _ in range(60):
        x, y, z = rand_vec(2), rand_vec(2), rand_vec(2)
        sxy = split_form(x, y)[1]
        syx = split_form(y, x)[1]
        assert sxy == -syx
        assert split_form(x, x)[1] == Cyc.zero(M)
        # additivity in each slot
        xz = tuple(a + b for a, b in zip(x, z))
        assert split_form(xz, y)[1] == sxy + split_form(z, y)[1]
