"""Integer-only 3x3 matrix kernels over Z[omega_d].

The descent loop and word evaluation only ever touch matrices whose entries
lie in the ring of integers.  Representing those as flat 18-tuples of ints
(row-major (a, b) coordinate pairs over the basis (1, omega_d)) avoids all
Fraction overhead in the hot paths.  ``c`` below is always (d + 1) // 4,
the constant in omega^2 = -c - omega.
"""

from __future__ import annotations

IMat = tuple  # flat 18-tuple: (a00, b00, a01, b01, ..., a22, b22)

IDENTITY: IMat = (1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0)
# Antidiagonal form matrix J = antidiag(1, 1, 1).
FORM_J: IMat = (0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0)


def imat_mul(x: IMat, y: IMat, c: int) -> IMat:
    out = []
    for i in (0, 6, 12):
        xa0, xb0, xa1, xb1, xa2, xb2 = x[i : i + 6]
        for j in (0, 2, 4):
            ya0, yb0 = y[j], y[j + 1]
            ya1, yb1 = y[j + 6], y[j + 7]
            ya2, yb2 = y[j + 12], y[j + 13]
            bb0 = xb0 * yb0
            bb1 = xb1 * yb1
            bb2 = xb2 * yb2
            out.append(
                xa0 * ya0 - c * bb0 + xa1 * ya1 - c * bb1 + xa2 * ya2 - c * bb2
            )
            out.append(
                xa0 * yb0 + xb0 * ya0 - bb0
                + xa1 * yb1 + xb1 * ya1 - bb1
                + xa2 * yb2 + xb2 * ya2 - bb2
            )
    return tuple(out)


def imat_conj_transpose(x: IMat) -> IMat:
    out = []
    for j in range(3):
        for i in range(3):
            a, b = x[6 * i + 2 * j], x[6 * i + 2 * j + 1]
            out.append(a - b)
            out.append(-b)
    return tuple(out)


def imat_form_inverse(x: IMat) -> IMat:
    """J * conj_transpose(x) * J; the exact inverse of a form-unitary matrix."""
    out = []
    for i in range(3):
        for j in range(3):
            # (J x* J)[i][j] = conj(x[2-j][2-i])
            a, b = x[6 * (2 - j) + 2 * (2 - i)], x[6 * (2 - j) + 2 * (2 - i) + 1]
            out.append(a - b)
            out.append(-b)
    return tuple(out)


def imat_is_unitary(x: IMat, c: int) -> bool:
    return imat_mul(imat_conj_transpose(x), imat_mul(FORM_J, x, c), c) == FORM_J


def imat_pow(x: IMat, n: int, c: int) -> IMat:
    """x**n by binary exponentiation; negative n uses the form inverse."""
    if n < 0:
        x = imat_form_inverse(x)
        n = -n
    acc = IDENTITY
    while n:
        if n & 1:
            acc = imat_mul(acc, x, c)
        x = imat_mul(x, x, c) if n > 1 else x
        n >>= 1
    return acc


def imat_scale_unit(x: IMat, ua: int, ub: int, c: int) -> IMat:
    """Entrywise multiplication by the ring element ua + ub*omega."""
    out = []
    for k in range(0, 18, 2):
        a, b = x[k], x[k + 1]
        bb = b * ub
        out.append(a * ua - c * bb)
        out.append(a * ub + b * ua - bb)
    return tuple(out)
