"""Exact rational scalars and the tiny linear-algebra kernel.

Scalars are ``fractions.Fraction`` throughout (arbitrary precision,
always stored reduced, denominator positive), so equality is structural
and arithmetic never rounds.  ``rat``/``rat_str`` fix the "p/q" wire
format used in all JSON payloads.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, lcm

from .errors import DimensionMismatchError, InvalidChartError

Rational = Fraction


def rat(value) -> Fraction:
    """Parse a rational from an int, Fraction or a "p/q" / "p" string."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InvalidChartError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidChartError(f"cannot parse rational {value!r}") from exc
    raise InvalidChartError(f"cannot parse rational {value!r}")


def rat_str(value: Fraction) -> str:
    """Serialize as "p" for integers, "p/q" otherwise."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def sign(value) -> int:
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0


def _integer_rows(rows):
    """Clear denominators row by row; the multipliers are positive, so
    the determinant sign is unchanged."""
    out = []
    for row in rows:
        fracs = [Fraction(x) for x in row]
        mult = lcm(*(f.denominator for f in fracs)) if fracs else 1
        out.append([int(f * mult) for f in fracs])
    return out


def sign_det(rows) -> int:
    """Exact sign of det(rows) via Bareiss fraction-free elimination.

    Accepts any square matrix of Fractions/ints (list of rows).
    """
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise DimensionMismatchError(f"matrix is not square: {n} rows")
    if n == 0:
        return 1
    m = _integer_rows(rows)
    flip = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    flip = -flip
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return flip * sign(m[n - 1][n - 1])


def elementary_symmetric(values, i: int) -> Fraction:
    """i-th elementary symmetric polynomial of the values, sigma_0 = 1."""
    vals = [Fraction(v) for v in values]
    if not 0 <= i <= len(vals):
        raise IndexError(f"index {i} out of range for {len(vals)} values")
    e = [Fraction(0)] * (i + 1)
    e[0] = Fraction(1)
    for v in vals:
        for j in range(min(i, len(e) - 1), 0, -1):
            e[j] += e[j - 1] * v
    return e[i]


def is_power_of_linear_form(xi, d: int) -> bool:
    """Whether the binary form with coefficients xi (degree d) is a
    scalar multiple of a d-th power of a linear form.

    With c_j = xi_j / C(d,j) this holds iff the 2 x d matrix with rows
    (c_0..c_{d-1}) and (c_1..c_d) has rank <= 1, tested via 2x2 minors.
    """
    coords = [Fraction(x) for x in xi]
    if len(coords) != d + 1:
        raise DimensionMismatchError(
            f"chart has {len(coords)} entries, expected {d + 1}"
        )
    if all(x == 0 for x in coords):
        raise InvalidChartError("all-zero chart")
    c = [coords[j] / comb(d, j) for j in range(d + 1)]
    for i in range(d):
        for j in range(i + 1, d):
            if c[i] * c[j + 1] != c[j] * c[i + 1]:
                return False
    return True
