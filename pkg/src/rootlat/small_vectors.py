"""Enumeration of short dual-lattice vectors and their Weyl-orbit structure.

Dual vectors are written as ``v = sum_i y_i v_i^`` with integer ``y`` (so
``y_i = v . v_i``), and ``-v^2 = y^T (-G^{-1}) y`` is a positive definite form.
:func:`enumerate_dual_up_to` runs a Fincke-Pohst search on that form entirely
in rational arithmetic, so the result is provably complete.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import floor
from typing import List, Sequence, Tuple

from .errors import RankCapError, RootLatticeError
from .exact import Vector, is_integral
from .lattice import Lattice, pairings, square
from .weyl import OrbitSummary, canonical_rep, generator_label

ENUMERATION_RANK_CAP = 10
MAX_K = 5


def _check_rank(L: Lattice) -> None:
    if len(L.gram) > ENUMERATION_RANK_CAP:
        raise RankCapError(
            f"dual enumeration capped at rank {ENUMERATION_RANK_CAP}, got {len(L.gram)}"
        )


def _ldl_upper(a: Sequence[Sequence[Fraction]]) -> List[List[Fraction]]:
    """Square-root free Cholesky: ``Q(x) = sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2``."""
    n = len(a)
    q = [[Fraction(x) for x in row] for row in a]
    for i in range(n):
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    return q


def _integers_near(center: Fraction, radius_sq: Fraction) -> range:
    """All integers t with ``(t - center)^2 <= radius_sq``."""
    t = floor(center)
    if (t - center) ** 2 > radius_sq:
        t += 1
        if (t - center) ** 2 > radius_sq:
            return range(0)
    lo = hi = t
    while (lo - 1 - center) ** 2 <= radius_sq:
        lo -= 1
    while (hi + 1 - center) ** 2 <= radius_sq:
        hi += 1
    return range(lo, hi + 1)


def short_vectors_of_form(form: Sequence[Sequence[Fraction]], bound: Fraction) -> List[Tuple[int, ...]]:
    """Nonzero integer ``x`` with ``x^T form x <= bound`` for a positive definite rational form."""
    n = len(form)
    q = _ldl_upper(form)
    x = [0] * n
    out: List[Tuple[int, ...]] = []

    def search(i: int, remaining: Fraction) -> None:
        center = -sum((q[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        for t in _integers_near(center, remaining / q[i][i]):
            x[i] = t
            rest = remaining - q[i][i] * (t - center) ** 2
            if i == 0:
                if any(x):
                    out.append(tuple(x))
            else:
                search(i - 1, rest)
        x[i] = 0

    if n:
        search(n - 1, Fraction(bound))
    return out


def enumerate_dual_up_to(L: Lattice, bound) -> List[Vector]:
    """All nonzero ``v`` in the dual lattice with ``bound <= v^2 < 0``, sorted."""
    _check_rank(L)
    bound = Fraction(bound)
    if bound >= 0:
        raise RootLatticeError("bound must be negative")
    return list(_enumerate_cached(L, bound))


@lru_cache(maxsize=256)
def _enumerate_cached(L: Lattice, bound: Fraction) -> Tuple[Vector, ...]:
    ginv = L.gram_inverse
    form = [[-x for x in row] for row in ginv]
    found = []
    for y in short_vectors_of_form(form, -bound):
        found.append(tuple(sum((row[j] * y[j] for j in range(len(y))), Fraction(0)) for row in ginv))
    return tuple(sorted(found))


def group_into_orbits(L: Lattice, vectors, keep_elements: bool = True) -> List[OrbitSummary]:
    """Partition a Weyl-stable vector set into orbits, keyed by canonical representative.

    Orbits are ordered by square (closest to zero first), then with orbits
    outside the lattice before lattice orbits, then by representative.
    """
    groups = defaultdict(set)
    for v in vectors:
        groups[canonical_rep(L, v)].add(tuple(v))
    out = [
        OrbitSummary(
            representative=rep,
            size=len(members),
            generator_label=generator_label(L, rep),
            square=square(L, rep),
            elements=frozenset(members) if keep_elements else None,
        )
        for rep, members in groups.items()
    ]
    out.sort(key=lambda o: (-o.square, not o.in_dual_minus_lattice, _label_key(L, o)))
    return out


def _label_key(L: Lattice, o: OrbitSummary):
    # "a3^" sorts before "a6^": compare supports of the dual expansion first
    y = pairings(L, o.representative)
    return tuple(i for i, c in enumerate(y) if c), y


@dataclass(frozen=True)
class SmallVectorReport:
    lattice: str
    k: int
    norm_value: Fraction
    orbits: Tuple[OrbitSummary, ...]

    @property
    def in_dual_minus_lattice(self) -> Tuple[bool, ...]:
        return tuple(o.in_dual_minus_lattice for o in self.orbits)

    @property
    def n_vectors(self) -> int:
        return sum(o.size for o in self.orbits)

    def generators(self) -> Tuple[str, ...]:
        return tuple(o.generator_label for o in self.orbits)


def distinct_norms(L: Lattice, count: int) -> Tuple[List[Fraction], List[Vector]]:
    """The ``count`` distinct nonzero dual norms closest to zero, with all vectors up to the last."""
    bound = Fraction(-2)
    while True:
        vectors = enumerate_dual_up_to(L, bound)
        values = sorted({square(L, v) for v in vectors}, reverse=True)
        if len(values) >= count:
            cut = values[count - 1]
            return values[:count], [v for v in vectors if square(L, v) >= cut]
        bound -= 2


def kth_smallest(L: Lattice, k: int) -> SmallVectorReport:
    """The k-th distinct value of ``v^2`` over nonzero dual vectors and its orbits."""
    _check_rank(L)
    if not 1 <= k <= MAX_K:
        raise RootLatticeError(f"k must lie in 1..{MAX_K}, got {k}")
    values, vectors = distinct_norms(L, k)
    value = values[k - 1]
    shell = [v for v in vectors if square(L, v) == value]
    return SmallVectorReport(L.name, k, value, tuple(group_into_orbits(L, shell)))


@lru_cache(maxsize=None)
def in_scope_orbits(L: Lattice) -> Tuple[OrbitSummary, ...]:
    """Orbits of nonzero vectors outside the lattice with square >= -2, elements included."""
    _check_rank(L)
    vectors = [v for v in enumerate_dual_up_to(L, -2) if not is_integral(v)]
    return tuple(group_into_orbits(L, vectors))
