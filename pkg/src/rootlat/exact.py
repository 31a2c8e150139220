"""Small exact-rational helpers: matrix inverse, determinant and the "p/q" wire format."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Tuple

from .errors import LatticeSpecError

Vector = Tuple[Fraction, ...]
Matrix = Tuple[Tuple[Fraction, ...], ...]


def vec(values) -> Vector:
    return tuple(Fraction(x) for x in values)


def determinant(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free Bareiss elimination."""
    a = [list(map(int, r)) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def inverse(rows: Sequence[Sequence[int]]) -> Matrix:
    """Exact inverse by Gauss-Jordan elimination over the rationals."""
    n = len(rows)
    aug = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
           for i, r in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(r[n:]) for r in aug)


def is_integral(v: Sequence[Fraction]) -> bool:
    return all(x.denominator == 1 for x in v)


def format_rational(x: Fraction) -> str:
    """Canonical wire form: "p/q" in lowest terms with q > 0; integers print as "p"."""
    return str(Fraction(x))


def format_vector(v: Sequence[Fraction]) -> list[str]:
    return [format_rational(x) for x in v]


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise LatticeSpecError(f"bad rational {text!r}") from exc


def parse_vector_literal(text: str) -> tuple[Vector, ...]:
    """Parse ``"p/q,p/q;p/q,..."``: ';' separates components, ',' separates coefficients."""
    if not text.strip():
        raise LatticeSpecError("empty vector literal", 0)
    parts = []
    for chunk in text.split(";"):
        if not chunk.strip():
            raise LatticeSpecError("empty vector component", text.find(";"))
        parts.append(tuple(parse_rational(t) for t in chunk.split(",")))
    return tuple(parts)
