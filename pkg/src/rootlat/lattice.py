"""Negative-definite ADE root lattices with exact rational vector arithmetic.

Vectors are tuples of :class:`fractions.Fraction` holding coefficients in the
simple-root basis, so a vector lies in the root lattice iff every coefficient
is an integer.  Gram matrices follow the negative-definite convention: roots
have square -2 and adjacent simple roots pair to +1.

Vertex labels follow the usual pictures: ``A_n`` is the chain a1-...-an,
``D_n`` is the chain d1-...-d(n-2) with d(n-1) and dn both attached to
d(n-2), and ``E_n`` is the chain e2-...-en with e1 attached to e4.  Vertex
indices in the public API are 1-based so they line up with these labels.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence, Tuple, Union

from .errors import (
    DimensionMismatchError,
    IndexOutOfRangeError,
    InvalidRankError,
    LatticeSpecError,
    NotInDualError,
)
from .exact import Matrix, Vector, determinant, inverse, is_integral

KINDS = ("A", "D", "E")


class _LatticeMixin:
    """Arithmetic shared by irreducible and composite lattices (needs ``gram``)."""

    gram: Tuple[Tuple[int, ...], ...]

    @cached_property
    def neighbors(self) -> Tuple[Tuple[int, ...], ...]:
        """0-based Dynkin neighbours of each vertex."""
        n = len(self.gram)
        return tuple(
            tuple(j for j in range(n) if j != i and self.gram[i][j] != 0) for i in range(n)
        )

    @cached_property
    def gram_inverse(self) -> Matrix:
        return inverse(self.gram)

    @cached_property
    def determinant(self) -> int:
        return determinant(self.gram)

    def zero(self) -> Vector:
        return (Fraction(0),) * len(self.gram)

    def basis_vector(self, i: int) -> Vector:
        """The simple root ``v_i`` (1-based)."""
        _check_index(self, i)
        return tuple(Fraction(int(j == i - 1)) for j in range(len(self.gram)))


@dataclass(frozen=True)
class IrreducibleRootLattice(_LatticeMixin):
    kind: str
    rank: int

    def __post_init__(self):
        kind = self.kind.upper() if isinstance(self.kind, str) else self.kind
        if kind not in KINDS:
            raise InvalidRankError(f"unknown root lattice kind {self.kind!r}; expected A, D or E")
        object.__setattr__(self, "kind", kind)
        n = self.rank
        if not isinstance(n, int) or isinstance(n, bool):
            raise InvalidRankError(f"rank must be an integer, got {n!r}")
        if kind == "A" and n < 1:
            raise InvalidRankError(f"A_n needs n >= 1, got n = {n}")
        if kind == "D" and n < 4:
            raise InvalidRankError(f"D_n needs n >= 4, got n = {n}")
        if kind == "E" and n not in (6, 7, 8):
            raise InvalidRankError(f"E_n needs n in {{6, 7, 8}}, got n = {n}")

    @property
    def name(self) -> str:
        return f"{self.kind}{self.rank}"

    def __str__(self) -> str:
        return self.name

    @property
    def components(self) -> Tuple["IrreducibleRootLattice", ...]:
        return (self,)

    @property
    def offsets(self) -> Tuple[int, ...]:
        return (0,)

    @cached_property
    def labels(self) -> Tuple[str, ...]:
        return tuple(f"{self.kind.lower()}{i}" for i in range(1, self.rank + 1))

    @cached_property
    def edges(self) -> frozenset:
        """Dynkin edges as 1-based pairs ``(i, j)`` with ``i < j``."""
        n = self.rank
        if self.kind == "A":
            pairs = [(i, i + 1) for i in range(1, n)]
        elif self.kind == "D":
            pairs = [(i, i + 1) for i in range(1, n - 2)] + [(n - 2, n - 1), (n - 2, n)]
        else:
            pairs = [(i, i + 1) for i in range(2, n)] + [(1, 4)]
        return frozenset(pairs)

    @cached_property
    def gram(self) -> Tuple[Tuple[int, ...], ...]:
        n = self.rank
        g = [[-2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i, j in self.edges:
            g[i - 1][j - 1] = g[j - 1][i - 1] = 1
        return tuple(tuple(r) for r in g)

    def label_index(self, label: str) -> int:
        """1-based index of a vertex label such as ``"d5"``."""
        try:
            return self.labels.index(label.lower()) + 1
        except ValueError:
            raise IndexOutOfRangeError(f"{self.name} has no vertex {label!r}") from None

    def split(self, v: Sequence[Fraction]) -> Tuple[Vector, ...]:
        return (tuple(v),)


@dataclass(frozen=True)
class CompositeLattice(_LatticeMixin):
    """Orthogonal direct sum of irreducible root lattices (global coordinates)."""

    components: Tuple[IrreducibleRootLattice, ...]

    @property
    def name(self) -> str:
        return "+".join(c.name for c in self.components)

    def __str__(self) -> str:
        return self.name

    @cached_property
    def rank(self) -> int:
        return sum(c.rank for c in self.components)

    @cached_property
    def offsets(self) -> Tuple[int, ...]:
        return tuple(itertools.accumulate([0] + [c.rank for c in self.components[:-1]]))

    @cached_property
    def labels(self) -> Tuple[str, ...]:
        return tuple(
            f"{j + 1}:{lab}" for j, c in enumerate(self.components) for lab in c.labels
        )

    @cached_property
    def gram(self) -> Tuple[Tuple[int, ...], ...]:
        return _block_diagonal([c.gram for c in self.components], 0)

    @cached_property
    def gram_inverse(self) -> Matrix:
        return _block_diagonal([c.gram_inverse for c in self.components], Fraction(0))

    @cached_property
    def determinant(self) -> int:
        d = 1
        for c in self.components:
            d *= c.determinant
        return d

    def split(self, v: Sequence[Fraction]) -> Tuple[Vector, ...]:
        _check_length(self, v)
        return tuple(
            tuple(v[o:o + c.rank]) for o, c in zip(self.offsets, self.components)
        )

    def join(self, parts: Iterable[Sequence[Fraction]]) -> Vector:
        parts = list(parts)
        if len(parts) != len(self.components):
            raise DimensionMismatchError(
                f"{self.name} has {len(self.components)} components, got {len(parts)}"
            )
        out: list[Fraction] = []
        for p, c in zip(parts, self.components):
            if len(p) != c.rank:
                raise DimensionMismatchError(f"component {c.name} needs {c.rank} coefficients")
            out.extend(Fraction(x) for x in p)
        return tuple(out)


Lattice = Union[IrreducibleRootLattice, CompositeLattice]


def _block_diagonal(blocks, zero):
    n = sum(len(b) for b in blocks)
    rows = []
    offset = 0
    for b in blocks:
        k = len(b)
        for r in b:
            rows.append((zero,) * offset + tuple(r) + (zero,) * (n - offset - k))
        offset += k
    return tuple(rows)


def _check_length(L, v) -> None:
    if len(v) != len(L.gram):
        raise DimensionMismatchError(
            f"{L.name} has rank {len(L.gram)}, vector has {len(v)} coefficients"
        )


def _check_index(L, i: int) -> None:
    if not 1 <= i <= len(L.gram):
        raise IndexOutOfRangeError(f"vertex index {i} outside 1..{len(L.gram)} for {L.name}")


@lru_cache(maxsize=None)
def build_irreducible(kind: str, rank: int) -> IrreducibleRootLattice:
    return IrreducibleRootLattice(kind.upper(), rank)


def build_composite(specs: Iterable) -> CompositeLattice:
    """Build an orthogonal sum from ``(kind, rank)`` pairs or ready-made lattices."""
    comps = []
    for s in specs:
        if isinstance(s, IrreducibleRootLattice):
            comps.append(s)
        else:
            kind, rank = s
            comps.append(build_irreducible(kind, rank))
    if not comps:
        raise InvalidRankError("a composite lattice needs at least one component")
    return CompositeLattice(tuple(comps))


def pairings(L: Lattice, v: Sequence[Fraction]) -> Vector:
    """``(v . v_1, ..., v . v_n)``, i.e. ``G v``."""
    _check_length(L, v)
    return tuple(
        -2 * v[i] + sum((v[j] for j in nbrs), Fraction(0))
        for i, nbrs in enumerate(L.neighbors)
    )


def inner_product(L: Lattice, v: Sequence[Fraction], w: Sequence[Fraction]) -> Fraction:
    _check_length(L, v)
    _check_length(L, w)
    return sum((a * b for a, b in zip(pairings(L, v), w)), Fraction(0))


def square(L: Lattice, v: Sequence[Fraction]) -> Fraction:
    return inner_product(L, v, v)


def dual_basis_vector(L: Lattice, i: int) -> Vector:
    """``v_i^``: pairs to 1 with ``v_i`` and 0 with every other simple root."""
    _check_index(L, i)
    return tuple(row[i - 1] for row in L.gram_inverse)


def in_dual(L: Lattice, v: Sequence[Fraction]) -> bool:
    return is_integral(pairings(L, v))


def in_lattice(v: Sequence[Fraction]) -> bool:
    return is_integral(v)


def coefficient_sum(v: Sequence[Fraction]) -> Fraction:
    return sum(v, Fraction(0))


@dataclass(frozen=True)
class DiscriminantGroup:
    """``R^ / R`` presented by dual basis vectors of chosen vertices.

    Generator ``j`` has order ``invariant_factors[j]``.
    """

    lattice: str
    invariant_factors: Tuple[int, ...]
    generators: Tuple[Tuple[str, Vector], ...]
    generator_squares: Tuple[Fraction, ...]

    @property
    def order(self) -> int:
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def squares_mod2(self) -> Tuple[Fraction, ...]:
        return tuple(q % 2 for q in self.generator_squares)

    def describe(self) -> str:
        if not self.invariant_factors:
            return "0"
        return " x ".join(f"Z/{d}" for d in self.invariant_factors)


def _generator_vertices(L: IrreducibleRootLattice) -> Tuple[Tuple[int, int], ...]:
    """(vertex index, order) pairs of the standard generators for each kind."""
    n = L.rank
    if L.kind == "A":
        return ((1, n + 1),)
    if L.kind == "D":
        return ((1, 2), (n, 2)) if n % 2 == 0 else ((n, 4),)
    return {6: ((6, 3),), 7: ((7, 2),), 8: ()}[n]


@lru_cache(maxsize=None)
def discriminant_group(L: IrreducibleRootLattice) -> DiscriminantGroup:
    """Discriminant group with closed-form generators; squares are computed exactly."""
    if not isinstance(L, IrreducibleRootLattice):
        raise TypeError("discriminant_group expects an irreducible lattice")
    gens = _generator_vertices(L)
    vectors = tuple((L.labels[i - 1], dual_basis_vector(L, i)) for i, _ in gens)
    return DiscriminantGroup(
        lattice=L.name,
        invariant_factors=tuple(d for _, d in gens),
        generators=vectors,
        generator_squares=tuple(square(L, v) for _, v in vectors),
    )


def coset_of(L: Lattice, v: Sequence[Fraction]):
    """Class of a dual vector in the discriminant group.

    For an irreducible lattice this is a tuple of residues against the
    generators of :func:`discriminant_group`; for a composite lattice it is a
    tuple of such tuples, one per component.  The class is all zeros iff
    ``v`` lies in the lattice.
    """
    _check_length(L, v)
    if not in_dual(L, v):
        raise NotInDualError(f"vector does not pair integrally with {L.name}")
    if isinstance(L, CompositeLattice):
        return tuple(_coset_irreducible(c, part) for c, part in zip(L.components, L.split(v)))
    return _coset_irreducible(L, tuple(v))


@lru_cache(maxsize=65536)
def _coset_irreducible(L: IrreducibleRootLattice, v: Sequence[Fraction]) -> Tuple[int, ...]:
    group = discriminant_group(L)
    gens = [g for _, g in group.generators]
    for residues in itertools.product(*(range(d) for d in group.invariant_factors)):
        shifted = [
            x - sum((c * g[k] for c, g in zip(residues, gens)), Fraction(0))
            for k, x in enumerate(v)
        ]
        if is_integral(shifted):
            return residues
    raise NotInDualError(f"no discriminant class found for vector in {L.name}")


_TOKEN = re.compile(r"(?:(\d+)\*)?([A-Za-z])(\d+)")


def parse_lattice_spec(text: str) -> Lattice:
    """Parse ``"A2+A2+A2"``, ``"4*a2"``, ``"D5 + E7"``.

    A single summand yields an :class:`IrreducibleRootLattice`; anything else a
    :class:`CompositeLattice`.
    """
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise LatticeSpecError("empty lattice spec", 0)
    specs: list[Tuple[str, int]] = []
    pos = 0
    for token in compact.split("+"):
        m = _TOKEN.fullmatch(token)
        if not m:
            raise LatticeSpecError(f"cannot parse summand {token!r}", pos)
        mult, kind, rank = m.groups()
        if kind.upper() not in KINDS:
            raise LatticeSpecError(f"unsupported root lattice kind {kind!r}", pos)
        count = int(mult) if mult else 1
        if count < 1:
            raise LatticeSpecError("multiplier must be positive", pos)
        specs.extend([(kind.upper(), int(rank))] * count)
        pos += len(token) + 1
    if len(specs) == 1:
        return build_irreducible(*specs[0])
    return build_composite(specs)
