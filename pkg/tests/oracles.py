"""Independent oracles used to freeze and cross-check expected values.

None of these share code with the enumeration paths under test: the dual
lattice box search is a plain numpy scan over integer pairing vectors, Smith
normal form and inverses come from sympy, and orbits use a naive closure
with a matrix form of the reflection.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import numpy as np
import sympy
from sympy.matrices.normalforms import smith_normal_form


def sympy_inverse(gram):
    return sympy.Matrix(gram).inv()


def snf_invariant_factors(gram) -> list:
    d = smith_normal_form(sympy.Matrix(gram), domain=sympy.ZZ)
    diag = [abs(int(d[i, i])) for i in range(d.rows)]
    return sorted(x for x in diag if x != 1)


def _adjugate(gram):
    inv = sympy_inverse(gram)
    det = abs(int(sympy.Matrix(gram).det()))
    adj = np.array([[int(x * det) for x in inv.row(i)] for i in range(inv.rows)], dtype=np.int64)
    return adj, det


def dual_box(gram, bound, include_lattice=True):
    """All nonzero dual vectors with ``bound <= v^2 < 0``, by scanning a pairing box.

    A dual vector is ``v = G^{-1} y`` with integer ``y_i = v . v_i``.  Cauchy-Schwarz
    against a root gives ``y_i^2 <= 2 |v^2| <= 2 |bound|``, so the box
    ``|y_i| <= floor(sqrt(2 |bound|))`` is complete.
    """
    bound = Fraction(bound)
    n = len(gram)
    adj, det = _adjugate(gram)  # adj = det * G^{-1}
    r = math.isqrt(int(2 * -bound))
    span = np.arange(-r, r + 1, dtype=np.int64)
    head = max(0, n - 8)
    out = []
    for prefix in itertools.product(range(-r, r + 1), repeat=head):
        tail = np.stack(np.meshgrid(*([span] * (n - head)), indexing="ij"), -1).reshape(-1, n - head)
        y = np.concatenate([np.tile(np.array(prefix, dtype=np.int64), (len(tail), 1)), tail], 1) \
            if head else tail
        num = y @ adj.T  # det * alpha
        q = np.einsum("ij,ij->i", num, y)  # det * v^2
        keep = (q * bound.denominator >= bound.numerator * det) & (q < 0)
        if not include_lattice:
            keep &= np.any(num % det != 0, axis=1)
        for row in num[keep]:
            out.append(tuple(Fraction(int(x), det) for x in row))
    return sorted(out)


def dual_box_square(gram, value, include_lattice=True):
    value = Fraction(value)
    return [v for v in dual_box(gram, value, include_lattice) if sq(gram, v) == value]


def sq(gram, v):
    n = len(v)
    return sum(v[i] * gram[i][j] * v[j] for i in range(n) for j in range(n))


def ip(gram, v, w):
    n = len(v)
    return sum(v[i] * gram[i][j] * w[j] for i in range(n) for j in range(n))


def roots_box(gram):
    """Integral vectors of square -2, from the same pairing box."""
    return [v for v in dual_box(gram, -2) if all(x.denominator == 1 for x in v) and sq(gram, v) == -2]


def orbit_closure(gram, w):
    """Naive orbit closure using the reflection matrices ``I + e_i (G e_i)^T``."""
    n = len(gram)
    mats = []
    for i in range(n):
        m = [[Fraction(int(a == b)) for b in range(n)] for a in range(n)]
        for j in range(n):
            m[i][j] += gram[i][j]
        mats.append(m)
    start = tuple(Fraction(x) for x in w)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for m in mats:
                u = tuple(sum(m[a][b] * v[b] for b in range(n)) for a in range(n))
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return seen


def partition_orbits(gram, vectors):
    remaining = set(vectors)
    orbits = []
    while remaining:
        v = min(remaining)
        o = orbit_closure(gram, v)
        orbits.append(o)
        remaining -= o
    return orbits


# Vertices whose coefficient in the highest root is 1, for the standard labelling.
SIMPLE_VERTEX_TABLE = {
    "A": lambda n: tuple(range(1, n + 1)),
    "D": lambda n: (1, n - 1, n),
    "E": lambda n: {6: (2, 6), 7: (7,), 8: ()}[n],
}
