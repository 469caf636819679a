"""Quaternions with cyclotomic components and the Hermitian/symplectic forms.

H is modelled as C + jC: q = z1 + j*z2 with z1, z2 in a cyclotomic field.
Left multiplication by q on the right C-basis (1, j) is the 2x2 matrix
[[z1, -conj(z2)], [z2, conj(z1)]], which identifies unit quaternions with
SU(2) and is how group elements stored as 2x2 matrices convert to
quaternions (q = (a, c) for a unitary matrix [[a, b], [c, d]]).
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import Cyc


class Quaternion:
    __slots__ = ("z1", "z2")

    def __init__(self, z1: Cyc, z2: Cyc):
        self.z1 = z1
        self.z2 = z2

    @staticmethod
    def zero(m: int = 1) -> "Quaternion":
        return Quaternion(Cyc.zero(m), Cyc.zero(m))

    @staticmethod
    def one(m: int = 1) -> "Quaternion":
        return Quaternion(Cyc.one(m), Cyc.zero(m))

    @staticmethod
    def from_complex(z: Cyc) -> "Quaternion":
        return Quaternion(z, Cyc.zero(z.m))

    @staticmethod
    def basis(name: str, m: int = 4) -> "Quaternion":
        """One of 1, i, j, k at a conductor divisible by 4 (for i and k)."""
        if name == "1":
            return Quaternion.one(m)
        if name == "i":
            return Quaternion(Cyc.zeta(m, m // 4), Cyc.zero(m))
        if name == "j":
            return Quaternion(Cyc.zero(m), Cyc.one(m))
        if name == "k":
            # k = ij = j * (-i)
            return Quaternion(Cyc.zero(m), -Cyc.zeta(m, m // 4))
        raise ValueError(f"unknown basis quaternion {name!r}")

    def is_zero(self) -> bool:
        return self.z1.is_zero() and self.z2.is_zero()

    def conj(self) -> "Quaternion":
        return Quaternion(self.z1.conj(), -self.z2)

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.z1 + other.z1, self.z2 + other.z2)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.z1 - other.z1, self.z2 - other.z2)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.z1, -self.z2)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            # (a1 + j a2)(b1 + j b2) = (a1 b1 - conj(a2) b2) + j (conj(a1) b2 + a2 b1)
            a1, a2, b1, b2 = self.z1, self.z2, other.z1, other.z2
            return Quaternion(a1 * b1 - a2.conj() * b2, a1.conj() * b2 + a2 * b1)
        if isinstance(other, (int, Fraction, Cyc)):
            # right action by a complex/rational scalar: (z1 + j z2) c = z1 c + j (z2 c)
            return Quaternion(self.z1 * other, self.z2 * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Quaternion(self.z1 * other, self.z2 * other)
        return NotImplemented

    def norm_sq(self) -> Fraction:
        """conj(q) * q, always rational and >= 0."""
        v = self.z1 * self.z1.conj() + self.z2 * self.z2.conj()
        return v.as_rational()

    def inverse(self) -> "Quaternion":
        n = self.norm_sq()
        if n == 0:
            raise ZeroDivisionError("zero quaternion")
        return self.conj() * (1 / n)

    def __eq__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return self.z1 == other.z1 and self.z2 == other.z2

    def __hash__(self):
        return hash((self.z1, self.z2))

    def __repr__(self):
        return f"Quaternion({self.z1}, j*{self.z2})"


def quat_from_matrix(mat: tuple[Cyc, Cyc, Cyc, Cyc]) -> Quaternion:
    """Convert an SU(2)-form matrix [[a, b], [c, d]] (b = -conj c, d = conj a)."""
    a, b, c, d = mat
    if d != a.conj() or b != -c.conj():
        raise ValueError("matrix is not in SU(2) normal form")
    return Quaternion(a, c)


def hermitian_form(x: tuple[Quaternion, ...], y: tuple[Quaternion, ...]) -> Quaternion:
    """(x, y) = sum_p conj(x_p) y_p, H-valued."""
    if len(x) != len(y):
        raise ValueError("length mismatch")
    m = x[0].z1.m if x else 1
    acc = Quaternion.zero(m)
    for xp, yp in zip(x, y):
        acc = acc + xp.conj() * yp
    return acc


def split_form(x: tuple[Quaternion, ...], y: tuple[Quaternion, ...]) -> tuple[Cyc, Cyc]:
    """Split (x, y) = <x,y>' + j <x,y> into (hermitian_part, symplectic_part)."""
    q = hermitian_form(x, y)
    return q.z1, q.z2
