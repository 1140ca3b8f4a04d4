"""Exact arithmetic in the imaginary quadratic rings behind the d=3,7,11 groups.

Two element types are provided:

* ``QuadInt`` -- an algebraic integer a + b*omega_d, where
  omega_d = (-1 + i*sqrt(d))/2 and d = 3, 7 or 11 (so d = 3 mod 4 and
  Z[omega_d] is the full ring of integers of Q(i*sqrt(d))).
* ``QuadRat`` -- a field element p + q*i*sqrt(d) with rational p, q; the
  field of fractions used for all intermediate computation.

Both carry the discriminant ``d`` and refuse mixed-``d`` arithmetic.  All
coordinates are arbitrary-precision (plain ``int`` / ``fractions.Fraction``),
so word evaluation can grow entries to hundreds of digits without overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

SUPPORTED_D = (3, 7, 11)


class TagMismatchError(ValueError):
    """Raised when elements over different discriminants are combined."""


def check_d(d: int) -> int:
    if d not in SUPPORTED_D:
        raise ValueError(f"unsupported discriminant {d!r}; expected one of {SUPPORTED_D}")
    return d


def _same_d(x, y) -> int:
    if x.d != y.d:
        raise TagMismatchError(f"mixed discriminants d={x.d} and d={y.d}")
    return x.d


@dataclass(frozen=True)
class QuadInt:
    """Algebraic integer a + b*omega_d with omega_d = (-1 + i*sqrt(d))/2.

    Multiplication uses omega^2 = -(d+1)/4 - omega.
    """

    a: int
    b: int
    d: int

    def __post_init__(self) -> None:
        check_d(self.d)

    def __add__(self, other: QuadInt) -> QuadInt:
        d = _same_d(self, other)
        return QuadInt(self.a + other.a, self.b + other.b, d)

    def __sub__(self, other: QuadInt) -> QuadInt:
        d = _same_d(self, other)
        return QuadInt(self.a - other.a, self.b - other.b, d)

    def __neg__(self) -> QuadInt:
        return QuadInt(-self.a, -self.b, self.d)

    def __mul__(self, other: QuadInt) -> QuadInt:
        d = _same_d(self, other)
        c = (d + 1) // 4
        bb = self.b * other.b
        return QuadInt(
            self.a * other.a - c * bb,
            self.a * other.b + self.b * other.a - bb,
            d,
        )

    def conj(self) -> QuadInt:
        """Complex conjugate; conj(omega) = -1 - omega."""
        return QuadInt(self.a - self.b, -self.b, self.d)

    def norm(self) -> int:
        """|x|^2 = a^2 - a*b + ((1+d)/4) * b^2, a nonnegative rational integer."""
        return self.a * self.a - self.a * self.b + ((1 + self.d) // 4) * self.b * self.b

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def to_quadrat(self) -> QuadRat:
        """Exact embedding: a + b*omega = (a - b/2) + (b/2)*i*sqrt(d)."""
        half_b = Fraction(self.b, 2)
        return QuadRat(self.a - half_b, half_b, self.d)

    def __complex__(self) -> complex:
        return complex(self.a - self.b / 2, self.b * self.d ** 0.5 / 2)

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}w"
        return f"{self.a}{self.b:+}w"


RationalLike = Union[int, Fraction]


@dataclass(frozen=True)
class QuadRat:
    """Field element p + q*i*sqrt(d) with exact rational p, q.

    ``Fraction`` keeps coordinates in lowest terms with positive denominator,
    so structural equality is exact equality and values hash consistently.
    """

    p: Fraction
    q: Fraction
    d: int

    def __post_init__(self) -> None:
        check_d(self.d)
        # Accept ints for convenience; store canonical Fractions.
        if not isinstance(self.p, Fraction):
            object.__setattr__(self, "p", Fraction(self.p))
        if not isinstance(self.q, Fraction):
            object.__setattr__(self, "q", Fraction(self.q))

    @classmethod
    def zero(cls, d: int) -> QuadRat:
        return cls(Fraction(0), Fraction(0), d)

    @classmethod
    def one(cls, d: int) -> QuadRat:
        return cls(Fraction(1), Fraction(0), d)

    @classmethod
    def from_rational(cls, value: RationalLike, d: int) -> QuadRat:
        return cls(Fraction(value), Fraction(0), d)

    def __add__(self, other: QuadRat) -> QuadRat:
        d = _same_d(self, other)
        return QuadRat(self.p + other.p, self.q + other.q, d)

    def __sub__(self, other: QuadRat) -> QuadRat:
        d = _same_d(self, other)
        return QuadRat(self.p - other.p, self.q - other.q, d)

    def __neg__(self) -> QuadRat:
        return QuadRat(-self.p, -self.q, self.d)

    def __mul__(self, other: QuadRat) -> QuadRat:
        d = _same_d(self, other)
        return QuadRat(
            self.p * other.p - d * self.q * other.q,
            self.p * other.q + self.q * other.p,
            d,
        )

    def conj(self) -> QuadRat:
        return QuadRat(self.p, -self.q, self.d)

    def norm_sq(self) -> Fraction:
        """|x|^2 = p^2 + d*q^2."""
        return self.p * self.p + self.d * self.q * self.q

    def inverse(self) -> QuadRat:
        """Multiplicative inverse conj(x) / |x|^2; raises on zero."""
        n = self.norm_sq()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return QuadRat(self.p / n, -self.q / n, self.d)

    def __truediv__(self, other: QuadRat) -> QuadRat:
        return self * other.inverse()

    def is_zero(self) -> bool:
        return self.p == 0 and self.q == 0

    def scale(self, r: RationalLike) -> QuadRat:
        r = Fraction(r)
        return QuadRat(self.p * r, self.q * r, self.d)

    # -- lattice coordinates -------------------------------------------------

    def omega_coords(self) -> tuple[Fraction, Fraction]:
        """Coordinates (a, b) over the basis (1, omega_d): a = p + q, b = 2q."""
        return (self.p + self.q, 2 * self.q)

    def is_integral(self) -> bool:
        """True iff the value lies in Z[omega_d]."""
        a, b = self.omega_coords()
        return a.denominator == 1 and b.denominator == 1

    def to_quadint(self) -> QuadInt:
        a, b = self.omega_coords()
        if a.denominator != 1 or b.denominator != 1:
            raise ValueError(f"{self} is not an algebraic integer")
        return QuadInt(int(a), int(b), self.d)

    def __complex__(self) -> complex:
        return complex(float(self.p), float(self.q) * self.d ** 0.5)

    def __str__(self) -> str:
        if self.q == 0:
            return str(self.p)
        return f"{self.p}{'+' if self.q >= 0 else '-'}{abs(self.q)}*i*sqrt({self.d})"


def omega(d: int) -> QuadInt:
    """The ring generator omega_d = (-1 + i*sqrt(d))/2."""
    return QuadInt(0, 1, check_d(d))


def quadint(a: int, b: int, d: int) -> QuadInt:
    return QuadInt(a, b, d)


def quadrat(p: RationalLike, q: RationalLike, d: int) -> QuadRat:
    return QuadRat(Fraction(p), Fraction(q), d)


def _round_half_up(x: Fraction) -> int:
    """Nearest integer, ties toward +infinity; exact on Fractions."""
    num, den = (x + Fraction(1, 2)).numerator, (x + Fraction(1, 2)).denominator
    return num // den


def nearest_candidates(target: QuadRat, radius: int) -> list[QuadInt]:
    """Lattice points of Z[omega_d] in a coordinate window around ``target``.

    The window is centred on the rounded unconstrained minimizer of
    |target - (a + b*omega_d)| over real (a, b), which is exactly
    (p + q, 2q) in (1, omega) coordinates.  All (2*radius + 1)^2 points are
    returned in deterministic order (b-major, then a, both ascending);
    selection among them happens downstream.

    For radius >= 1 the window always contains a point with
    |Re diff| <= 1/2 and |Im diff| <= sqrt(d)/4.
    """
    if radius < 1:
        raise ValueError("radius must be >= 1")
    a_star, b_star = target.omega_coords()
    a0 = _round_half_up(a_star)
    b0 = _round_half_up(b_star)
    d = target.d
    return [
        QuadInt(a, b, d)
        for b in range(b0 - radius, b0 + radius + 1)
        for a in range(a0 - radius, a0 + radius + 1)
    ]


def units(d: int) -> tuple[QuadInt, ...]:
    """The unit group of Z[omega_d]: six elements for d=3, just +-1 otherwise."""
    check_d(d)
    if d == 3:
        return (
            QuadInt(1, 0, 3),
            QuadInt(-1, 0, 3),
            QuadInt(0, 1, 3),
            QuadInt(0, -1, 3),
            QuadInt(-1, -1, 3),  # omega^2
            QuadInt(1, 1, 3),  # -omega^2
        )
    return (QuadInt(1, 0, d), QuadInt(-1, 0, d))


def unit_values(d: int) -> Iterator[QuadRat]:
    for u in units(d):
        yield u.to_quadrat()
