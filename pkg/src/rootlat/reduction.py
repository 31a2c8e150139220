"""Step-by-step reduction of a small dual vector to the dual of a simple vertex.

While some simple root ``v_j`` has ``w . v_j = -1`` the vector is replaced by
``w - v_j``, which is the reflection ``s_j(w)`` and lowers the coefficient sum
by exactly one.  For vectors outside the lattice with square >= -2 every
pairing with a root lies in {-1, 0, 1}, so the walk ends at some ``v^`` for a
simple vertex ``v``, whose coefficients are all negative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Optional, Sequence, Tuple

from .errors import InLatticeError, InvariantViolation, NotInDualError, OutOfScopeNormError
from .exact import Vector, format_vector, is_integral
from .lattice import (
    IrreducibleRootLattice,
    _check_length,
    dual_basis_vector,
    in_dual,
    inner_product,
    pairings,
    square,
)
from .weyl import canonical_rep, orbit, simple_vertices

SMALLEST = "smallest"
LARGEST = "largest"


@dataclass(frozen=True)
class ReductionStep:
    j: int  # 1-based vertex index of the subtracted simple root
    vector: Vector


@dataclass(frozen=True)
class ReductionTrace:
    lattice: str
    start: Vector
    steps: Tuple[ReductionStep, ...]
    end: Vector
    end_vertex: str

    def to_json(self) -> dict:
        return {
            "lattice": self.lattice,
            "start": format_vector(self.start),
            "steps": [{"j": s.j, "vector": format_vector(s.vector)} for s in self.steps],
            "end": format_vector(self.end),
            "end_vertex": self.end_vertex,
        }


def _check_in_scope(L: IrreducibleRootLattice, w: Vector) -> None:
    _check_length(L, w)
    if not in_dual(L, w):
        raise NotInDualError(f"vector is not in the dual of {L.name}")
    if is_integral(w):
        raise InLatticeError(f"vector lies in {L.name} itself; nothing to reduce")
    if square(L, w) < -2:
        raise OutOfScopeNormError(
            f"square {square(L, w)} < -2 is outside the small-vector range"
        )


@lru_cache(maxsize=None)
def _orbit_size(L: IrreducibleRootLattice, rep: Vector) -> int:
    return orbit(L, rep).size


def reduce_component(
    L: IrreducibleRootLattice, w: Sequence[Fraction], tie_break: str = SMALLEST
) -> ReductionTrace:
    """Reduce ``w`` by subtracting simple roots it pairs to -1 with; record every step."""
    if tie_break not in (SMALLEST, LARGEST):
        raise ValueError(f"tie_break must be {SMALLEST!r} or {LARGEST!r}")
    return _reduce(L, tuple(Fraction(x) for x in w), tie_break)


@lru_cache(maxsize=None)
def _reduce(L: IrreducibleRootLattice, start: Vector, tie_break: str) -> ReductionTrace:
    _check_in_scope(L, start)
    # the coefficient sum drops by one per step, so the orbit size bounds the walk
    cap = _orbit_size(L, canonical_rep(L, start))
    cur = list(start)
    steps = []
    while True:
        y = pairings(L, cur)
        hits = [k for k, p in enumerate(y) if p == -1]
        if not hits:
            break
        k = hits[0] if tie_break == SMALLEST else hits[-1]
        cur[k] -= 1
        steps.append(ReductionStep(k + 1, tuple(cur)))
        if len(steps) > cap:
            raise InvariantViolation(f"reduction in {L.name} exceeded {cap} steps")
    end = tuple(cur)
    y = pairings(L, end)
    if sorted(y) != [0] * (len(y) - 1) + [1]:
        raise InvariantViolation(
            f"reduction in {L.name} stopped at a vector with pairings {format_vector(y)}"
        )
    i = y.index(1) + 1
    if i not in simple_vertices(L):
        raise InvariantViolation(f"reduction in {L.name} ended at non-simple vertex {L.labels[i - 1]}")
    return ReductionTrace(L.name, start, tuple(steps), end, L.labels[i - 1])


class TraceCheck(NamedTuple):
    ok: bool
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def verify_trace(L: IrreducibleRootLattice, trace: ReductionTrace) -> TraceCheck:
    """Re-check a trace from scratch with only the inner product and dual basis.

    Returns a falsy :class:`TraceCheck` carrying a reason code on the first
    violated condition.
    """
    n = len(L.gram)
    if trace.lattice != L.name:
        return TraceCheck(False, "lattice-mismatch")
    vectors = [trace.start] + [s.vector for s in trace.steps] + [trace.end]
    if any(len(v) != n for v in vectors):
        return TraceCheck(False, "dimension-mismatch")
    basis = [tuple(Fraction(int(a == b)) for b in range(n)) for a in range(n)]

    start = trace.start
    if any(inner_product(L, start, b).denominator != 1 for b in basis):
        return TraceCheck(False, "start-not-dual")
    if all(x.denominator == 1 for x in start):
        return TraceCheck(False, "start-in-lattice")
    start_sq = inner_product(L, start, start)

    prev = start
    for step in trace.steps:
        if not 1 <= step.j <= n:
            return TraceCheck(False, "step-index")
        root = basis[step.j - 1]
        if inner_product(L, prev, root) != -1:
            return TraceCheck(False, "step-not-reflection")
        if step.vector != tuple(p - r for p, r in zip(prev, root)):
            return TraceCheck(False, "step-mismatch")
        if sum(prev) - sum(step.vector) != 1:
            return TraceCheck(False, "sum-drop")
        if inner_product(L, step.vector, step.vector) != start_sq:
            return TraceCheck(False, "square-changed")
        prev = step.vector

    end = trace.end
    if end != prev:
        return TraceCheck(False, "end-mismatch")
    if any(x.denominator != 1 for x in (s - e for s, e in zip(start, end))):
        return TraceCheck(False, "class-changed")
    if any(x >= 0 for x in end):
        return TraceCheck(False, "end-not-negative")
    if any(inner_product(L, end, b) == -1 for b in basis):
        return TraceCheck(False, "not-terminal")
    if trace.end_vertex not in L.labels:
        return TraceCheck(False, "end-vertex-unknown")
    if end != dual_basis_vector(L, L.labels.index(trace.end_vertex) + 1):
        return TraceCheck(False, "end-vertex-mismatch")
    return TraceCheck(True)
