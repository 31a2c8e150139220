"""Simple reflections, roots, simple vertices and Weyl orbits of dual vectors.

Orbit representatives are the unique elements ``u`` of an orbit with
``u . v_i >= 0`` for every simple root.  Under the negative-definite pairing
this is the anti-dominant chamber (its elements have non-positive
coefficients), and it contains exactly the dual vectors ``v^`` of simple
vertices for the small orbits, which makes labelling orbits by vertex direct.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import FrozenSet, Optional, Sequence, Tuple

from .errors import OrbitCapExceeded, RankCapError
from .exact import Vector, is_integral
from .lattice import (
    IrreducibleRootLattice,
    Lattice,
    _check_index,
    _check_length,
    coset_of,
    pairings,
    square,
)

ROOT_RANK_CAP = 12
DEFAULT_ORBIT_CAP = 100_000


def reflect(L: Lattice, w: Sequence[Fraction], i: int) -> Vector:
    """``s_i(w) = w + (w . v_i) v_i`` for the simple root ``v_i`` (1-based)."""
    _check_index(L, i)
    _check_length(L, w)
    c = _pairing(L, w, i - 1)
    out = list(Fraction(x) for x in w)
    out[i - 1] += c
    return tuple(out)


def _pairing(L: Lattice, w: Sequence[Fraction], k: int) -> Fraction:
    return -2 * w[k] + sum((w[j] for j in L.neighbors[k]), Fraction(0))


def _reflect_pair(L: Lattice, alpha: list, y: list, k: int) -> None:
    # in place on coefficients `alpha` and pairings `y`
    c = y[k]
    alpha[k] += c
    y[k] = -c
    for j in L.neighbors[k]:
        y[j] += c


def canonical_rep(L: Lattice, w: Sequence[Fraction]) -> Vector:
    """Orbit representative with ``u . v_i >= 0`` for all i.

    Greedy: reflect at the smallest ``i`` with ``u . v_i < 0``.  Each such
    reflection lowers the coefficient sum by ``|u . v_i|``, and the process
    stops because the orbit is finite.
    """
    alpha = [Fraction(x) for x in w]
    y = list(pairings(L, alpha))
    while True:
        k = next((k for k, p in enumerate(y) if p < 0), None)
        if k is None:
            return tuple(alpha)
        _reflect_pair(L, alpha, y, k)


def dual_expansion(L: Lattice, u: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """Coordinates of ``u`` in the dual basis (these are just the pairings)."""
    return pairings(L, u)


def generator_label(L: Lattice, u: Sequence[Fraction]) -> str:
    """Name an orbit by its representative: ``"a3^"``, ``"root"``, or a dual combination."""
    if not any(u):
        return "0"
    if is_integral(u) and square(L, u) == -2:
        return "root"
    terms = []
    for lab, m in zip(L.labels, dual_expansion(L, u)):
        if m == 0:
            continue
        coef = "" if m == 1 else ("-" if m == -1 else f"{m}*")
        terms.append(f"{coef}{lab}^")
    return " + ".join(terms)


@dataclass(frozen=True)
class OrbitSummary:
    representative: Vector
    size: int
    generator_label: str
    square: Fraction
    elements: Optional[FrozenSet[Vector]] = None

    @property
    def in_dual_minus_lattice(self) -> bool:
        return not is_integral(self.representative)

    def sorted_elements(self) -> list:
        return sorted(self.elements) if self.elements is not None else []


def orbit(
    L: Lattice, w: Sequence[Fraction], cap: int = DEFAULT_ORBIT_CAP, keep_elements: bool = False
) -> OrbitSummary:
    """Breadth-first closure of ``{w}`` under the simple reflections."""
    start = tuple(Fraction(x) for x in w)
    _check_length(L, start)
    seen = {start: pairings(L, start)}
    queue = deque([start])
    n = len(start)
    while queue:
        cur = queue.popleft()
        y = seen[cur]
        for k in range(n):
            if y[k] == 0:
                continue
            alpha, yy = list(cur), list(y)
            _reflect_pair(L, alpha, yy, k)
            nxt = tuple(alpha)
            if nxt not in seen:
                seen[nxt] = tuple(yy)
                if len(seen) > cap:
                    raise OrbitCapExceeded(cap, len(seen))
                queue.append(nxt)
    rep = canonical_rep(L, start)
    return OrbitSummary(
        representative=rep,
        size=len(seen),
        generator_label=generator_label(L, rep),
        square=square(L, start),
        elements=frozenset(seen) if keep_elements else None,
    )


@lru_cache(maxsize=None)
def all_roots(L: Lattice) -> Tuple[Vector, ...]:
    """Every vector of square -2 in ``L``, sorted; the union of the orbits of the simple roots."""
    if len(L.gram) > ROOT_RANK_CAP:
        raise RankCapError(f"root enumeration capped at rank {ROOT_RANK_CAP}, got {len(L.gram)}")
    roots: set = set()
    for i in range(1, len(L.gram) + 1):
        v = L.basis_vector(i)
        if v not in roots:
            roots |= orbit(L, v, keep_elements=True).elements
    return tuple(sorted(roots))


@lru_cache(maxsize=None)
def highest_root(L: IrreducibleRootLattice) -> Vector:
    """The root with largest coefficient sum (all coefficients positive)."""
    return max(all_roots(L), key=sum)


@lru_cache(maxsize=None)
def simple_vertices(L: IrreducibleRootLattice) -> Tuple[int, ...]:
    """1-based vertices whose coefficient in the highest root is 1."""
    theta = highest_root(L)
    return tuple(i + 1 for i, c in enumerate(theta) if c == 1)


def same_class(L: Lattice, v: Sequence[Fraction], w: Sequence[Fraction]) -> bool:
    return coset_of(L, v) == coset_of(L, w)
