"""Exact linear algebra over cyclotomic fields, plus the complex embedding
of quaternionic matrices and quaternionic row reduction.

Matrices are tuples of row tuples.  Everything is fraction-free in spirit:
entries are Cyc values and elimination divides exactly.
"""

from __future__ import annotations

from .cyclotomic import Cyc
from .quaternion import Quaternion

CycMatrix = tuple[tuple[Cyc, ...], ...]


def mat_mul(a: CycMatrix, b: CycMatrix) -> CycMatrix:
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        ai = a[i]
        for j in range(m):
            acc = ai[0] * b[0][j]
            for t in range(1, k):
                acc = acc + ai[t] * b[t][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def identity(n: int, m: int = 1) -> CycMatrix:
    one, zero = Cyc.one(m), Cyc.zero(m)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def rref(mat: CycMatrix) -> tuple[CycMatrix, list[int]]:
    """Reduced row echelon form and pivot column indices."""
    rows = [list(r) for r in mat]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if not rows[i][c].is_zero()), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [v * inv for v in rows[r]]
        for i in range(nrows):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [vi - f * vr for vi, vr in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return tuple(tuple(r_) for r_ in rows), pivots


def rank(mat: CycMatrix) -> int:
    return len(rref(mat)[1])


def kernel_basis(mat: CycMatrix) -> list[tuple[Cyc, ...]]:
    """Basis of the right kernel {x : mat @ x = 0}."""
    if not mat:
        return []
    ncols = len(mat[0])
    m = mat[0][0].m
    red, pivots = rref(mat)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Cyc.zero(m) for _ in range(ncols)]
        vec[fc] = Cyc.one(m)
        for r, pc in enumerate(pivots):
            vec[pc] = -red[r][fc]
        basis.append(tuple(vec))
    return basis


def subspace_intersection(a_rows: CycMatrix, b_rows: CycMatrix) -> list[tuple[Cyc, ...]]:
    """Intersection of two subspaces given by spanning row vectors.

    Computed via stacked kernels: x in span(A) & span(B) iff
    x = A^T u = B^T v, i.e. (u, v) in ker[A^T | -B^T].
    """
    if not a_rows or not b_rows:
        return []
    ncols = len(a_rows[0])
    stacked = tuple(
        tuple(a_rows[r][c] for r in range(len(a_rows)))
        + tuple(-b_rows[r][c] for r in range(len(b_rows)))
        for c in range(ncols)
    )
    combos = kernel_basis(stacked)
    na = len(a_rows)
    vecs = []
    for combo in combos:
        vec = [Cyc.zero(a_rows[0][0].m) for _ in range(ncols)]
        for r in range(na):
            if not combo[r].is_zero():
                for c in range(ncols):
                    vec[c] = vec[c] + combo[r] * a_rows[r][c]
        vecs.append(tuple(vec))
    # independent spanning set for the intersection
    if not vecs:
        return []
    red, pivots = rref(tuple(vecs))
    return [red[i] for i in range(len(pivots))]


# -- quaternionic matrices ---------------------------------------------------

def quat_matrix_embed(qmat: tuple[tuple[Quaternion, ...], ...]) -> CycMatrix:
    """Complex 2n x 2n block embedding; each q -> [[z1, -conj z2], [z2, conj z1]].

    A ring homomorphism: embed(AB) = embed(A) embed(B), and the complex rank
    of the image is twice the quaternionic rank.
    """
    n = len(qmat)
    k = len(qmat[0]) if n else 0
    rows: list[tuple[Cyc, ...]] = []
    for i in range(n):
        top: list[Cyc] = []
        bot: list[Cyc] = []
        for j in range(k):
            q = qmat[i][j]
            top.extend((q.z1, -q.z2.conj()))
            bot.extend((q.z2, q.z1.conj()))
        rows.append(tuple(top))
        rows.append(tuple(bot))
    return tuple(rows)


def quat_rank(qmat: tuple[tuple[Quaternion, ...], ...]) -> int:
    r = rank(quat_matrix_embed(qmat))
    assert r % 2 == 0, "complex rank of an embedded quaternionic matrix must be even"
    return r // 2


def quat_rank_direct(qmat: tuple[tuple[Quaternion, ...], ...]) -> int:
    """Row rank by Gaussian elimination in the division ring (cross-check)."""
    rows = [list(r) for r in qmat]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if not rows[i][c].is_zero()), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [inv * v for v in rows[r]]
        for i in range(nrows):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [vi - f * vr for vi, vr in zip(rows[i], rows[r])]
        r += 1
        if r == nrows:
            break
    return r


def quat_rref_key(rows: tuple[tuple[Quaternion, ...], ...]) -> tuple:
    """Canonical form of the left row space of a quaternionic matrix.

    Used to compare subspaces cut out by systems of left-linear equations:
    two systems have the same solution set iff their RREF keys agree.
    """
    work = [list(r) for r in rows]
    nrows = len(work)
    ncols = len(work[0]) if nrows else 0
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if not work[i][c].is_zero()), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = work[r][c].inverse()
        work[r] = [inv * v for v in work[r]]
        for i in range(nrows):
            if i != r and not work[i][c].is_zero():
                f = work[i][c]
                work[i] = [vi - f * vr for vi, vr in zip(work[i], work[r])]
        r += 1
        if r == nrows:
            break
    kept = [tuple((q.z1.num, q.z1.den, q.z2.num, q.z2.den) for q in row) for row in work[:r]]
    kept.sort()
    return tuple(kept)
