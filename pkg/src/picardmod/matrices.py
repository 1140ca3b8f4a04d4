"""3x3 matrices over Q(i*sqrt(d)), the signature-(2,1) Hermitian form, and
membership tests for the Picard modular group.

The form is the antidiagonal one, <z, w> = z1*conj(w3) + z2*conj(w2)
+ z3*conj(w1); group elements satisfy G* J G = J with J = antidiag(1,1,1).
Matrices are honest (non-projectivized); comparison up to a unit scalar goes
through :func:`projective_eq`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Optional, Sequence

from . import _fastmat
from .rings import QuadInt, QuadRat, TagMismatchError, check_d, unit_values

Vector3 = tuple[QuadRat, QuadRat, QuadRat]


@dataclass(frozen=True)
class Matrix3:
    """Immutable 3x3 matrix of ``QuadRat`` entries over one discriminant."""

    rows: tuple[Vector3, Vector3, Vector3]
    d: int

    def __post_init__(self) -> None:
        check_d(self.d)
        for row in self.rows:
            for e in row:
                if e.d != self.d:
                    raise TagMismatchError("matrix entries must share the discriminant")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[QuadRat]], d: int) -> Matrix3:
        return cls(tuple(tuple(row) for row in rows), d)

    @classmethod
    def identity(cls, d: int) -> Matrix3:
        one = QuadRat.one(d)
        zero = QuadRat.zero(d)
        return cls(((one, zero, zero), (zero, one, zero), (zero, zero, one)), d)

    def __getitem__(self, i: int) -> Vector3:
        return self.rows[i]

    def __matmul__(self, other: Matrix3) -> Matrix3:
        if self.d != other.d:
            raise TagMismatchError("mixed discriminants in matrix product")
        cols = tuple(zip(*other.rows))
        return Matrix3(
            tuple(
                tuple(
                    reduce(lambda s, t: s + t, (a * b for a, b in zip(row, col)))
                    for col in cols
                )
                for row in self.rows
            ),
            self.d,
        )

    def __neg__(self) -> Matrix3:
        return Matrix3(tuple(tuple(-e for e in row) for row in self.rows), self.d)

    def scale(self, s: QuadRat) -> Matrix3:
        return Matrix3(tuple(tuple(s * e for e in row) for row in self.rows), self.d)

    def conj_transpose(self) -> Matrix3:
        return Matrix3(
            tuple(tuple(self.rows[j][i].conj() for j in range(3)) for i in range(3)),
            self.d,
        )

    def det(self) -> QuadRat:
        r = self.rows
        return (
            r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
            - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
            + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0])
        )

    def adjugate(self) -> Matrix3:
        r = self.rows

        def cof(i: int, j: int) -> QuadRat:
            rows = [k for k in range(3) if k != i]
            cols = [k for k in range(3) if k != j]
            m = (
                r[rows[0]][cols[0]] * r[rows[1]][cols[1]]
                - r[rows[0]][cols[1]] * r[rows[1]][cols[0]]
            )
            return m if (i + j) % 2 == 0 else -m

        return Matrix3(tuple(tuple(cof(j, i) for j in range(3)) for i in range(3)), self.d)

    def inverse(self) -> Matrix3:
        """Exact inverse: J G* J when form-unitary, adjugate/det otherwise."""
        if is_unitary(self):
            return form_matrix(self.d) @ self.conj_transpose() @ form_matrix(self.d)
        det = self.det()
        if det.is_zero():
            raise ZeroDivisionError("singular matrix")
        return self.adjugate().scale(det.inverse())

    def is_integral(self) -> bool:
        return all(e.is_integral() for row in self.rows for e in row)

    def to_imat(self) -> Optional[tuple]:
        """Flat integer coordinates over (1, omega), or None if non-integral."""
        flat = []
        for row in self.rows:
            for e in row:
                a, b = e.omega_coords()
                if a.denominator != 1 or b.denominator != 1:
                    return None
                flat.append(int(a))
                flat.append(int(b))
        return tuple(flat)

    @classmethod
    def from_imat(cls, flat: tuple, d: int) -> Matrix3:
        it = iter(range(0, 18, 2))
        rows = tuple(
            tuple(QuadInt(flat[k], flat[k + 1], d).to_quadrat() for k in (next(it), next(it), next(it)))
            for _ in range(3)
        )
        return cls(rows, d)

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(e) for e in row) for row in self.rows) + "]"


def form_matrix(d: int) -> Matrix3:
    """The Hermitian form matrix J = antidiag(1, 1, 1)."""
    one = QuadRat.one(d)
    zero = QuadRat.zero(d)
    return Matrix3(((zero, zero, one), (zero, one, zero), (one, zero, zero)), d)


def herm(z: Sequence[QuadRat], w: Sequence[QuadRat]) -> QuadRat:
    """<z, w> = z1*conj(w3) + z2*conj(w2) + z3*conj(w1)."""
    if len(z) != 3 or len(w) != 3:
        raise ValueError("expected 3-vectors")
    if any(e.d != z[0].d for e in (*z, *w)):
        raise TagMismatchError("mixed discriminants in Hermitian form")
    return z[0] * w[2].conj() + z[1] * w[1].conj() + z[2] * w[0].conj()


def is_unitary(g: Matrix3) -> bool:
    """True iff G* J G = J exactly."""
    flat = g.to_imat()
    if flat is not None:
        return _fastmat.imat_is_unitary(flat, (g.d + 1) // 4)
    j = form_matrix(g.d)
    return g.conj_transpose() @ j @ g == j


def is_picard(g: Matrix3, d: Optional[int] = None) -> bool:
    """True iff G is form-unitary with all entries in Z[omega_d]."""
    if d is not None and d != g.d:
        return False
    return g.is_integral() and is_unitary(g)


def fixes_infinity(g: Matrix3) -> bool:
    """Stabilizer-of-infinity test: the (3,1) entry is exactly zero."""
    return g.rows[2][0].is_zero()


def projective_eq(g: Matrix3, h: Matrix3, d: Optional[int] = None) -> bool:
    """Equality up to a unit of Z[omega_d] ({+-1, +-w, +-w^2} for d=3)."""
    if g.d != h.d or (d is not None and d != g.d):
        return False
    for i in range(3):
        for j in range(3):
            if not h.rows[i][j].is_zero():
                if g.rows[i][j].is_zero():
                    return False
                u = g.rows[i][j] / h.rows[i][j]
                if all(u != v for v in unit_values(g.d)):
                    return False
                return g == h.scale(u)
            if not g.rows[i][j].is_zero():
                return False
    return g == h  # both zero; unreachable for group elements


@dataclass(frozen=True)
class BoundaryPoint:
    """A point of the boundary of the Siegel domain: either the point at
    infinity or finite coordinates (z1, z2) with 2*Re(z1) + |z2|^2 = 0."""

    z1: Optional[QuadRat]
    z2: Optional[QuadRat]
    d: int

    def __post_init__(self) -> None:
        check_d(self.d)
        if (self.z1 is None) != (self.z2 is None):
            raise ValueError("either both coordinates or neither")
        if self.z1 is not None:
            defect = 2 * self.z1.p + self.z2.norm_sq()
            if defect != 0:
                raise ValueError(f"not a boundary point: 2*Re(z1)+|z2|^2 = {defect}")

    @classmethod
    def infinity(cls, d: int) -> BoundaryPoint:
        return cls(None, None, d)

    @classmethod
    def finite(cls, z1: QuadRat, z2: QuadRat) -> BoundaryPoint:
        if z1.d != z2.d:
            raise TagMismatchError("mixed discriminants in boundary point")
        return cls(z1, z2, z1.d)

    @property
    def is_infinity(self) -> bool:
        return self.z1 is None


def boundary_image(g: Matrix3) -> BoundaryPoint:
    """Image of the point at infinity: q_inf if g31 = 0, else
    (g11/g31, g21/g31); the result always satisfies the boundary identity."""
    if not is_unitary(g):
        raise ValueError("boundary_image requires a form-unitary matrix")
    g31 = g.rows[2][0]
    if g31.is_zero():
        return BoundaryPoint.infinity(g.d)
    inv = g31.inverse()
    return BoundaryPoint.finite(g.rows[0][0] * inv, g.rows[1][0] * inv)


def scale_fraction(m: Matrix3, r: Fraction) -> Matrix3:
    return m.scale(QuadRat.from_rational(r, m.d))
