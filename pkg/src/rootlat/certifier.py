"""Exhaustive certification of square -1 / -2 vectors outside a composite root lattice.

Every ``w`` in ``R^ \\ R`` with ``w^2`` in {-1, -2} is built componentwise
from per-component dual vectors of square >= the target.  Each component
outside its lattice is reduced to a simple-vertex dual; the certificate
records the traces and whether every endpoint coefficient is negative.
"""

from __future__ import annotations

import os
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from .errors import (
    CertificationFailure,
    InvalidTargetError,
    InvariantViolation,
    RankCapError,
    RootLatticeError,
)
from .exact import Vector, format_rational, format_vector, is_integral
from .lattice import CompositeLattice, IrreducibleRootLattice, Lattice, coset_of, square
from .reduction import ReductionTrace, reduce_component, verify_trace
from .small_vectors import enumerate_dual_up_to

COMPONENT_RANK_CAP = 8
TOTAL_RANK_CAP = 24
TARGETS = (Fraction(-1), Fraction(-2))


@dataclass(frozen=True)
class CandidateVector:
    components: Tuple[Vector, ...]
    square: Fraction
    classes: Tuple[Tuple[int, ...], ...]

    @property
    def vector(self) -> Vector:
        return tuple(x for c in self.components for x in c)

    def to_json(self) -> dict:
        return {
            "components": [format_vector(c) for c in self.components],
            "square": format_rational(self.square),
            "class": [list(c) for c in self.classes],
        }


@dataclass(frozen=True)
class Certificate:
    candidate: CandidateVector
    component_traces: Tuple[Tuple[int, ReductionTrace], ...]
    conclusion: bool


def _components(C: Lattice) -> Tuple[IrreducibleRootLattice, ...]:
    return C.components


def _check_caps(C: Lattice) -> None:
    big = [c.name for c in _components(C) if c.rank > COMPONENT_RANK_CAP]
    if big:
        raise RankCapError(f"components above rank {COMPONENT_RANK_CAP}: {', '.join(big)}")
    if len(C.gram) > TOTAL_RANK_CAP:
        raise RankCapError(f"total rank {len(C.gram)} exceeds {TOTAL_RANK_CAP}")


def _check_target(target) -> Fraction:
    t = Fraction(target)
    if t not in TARGETS:
        raise InvalidTargetError(f"target square must be -1 or -2, got {target}")
    return t


@lru_cache(maxsize=None)
def _options(L: IrreducibleRootLattice, target: Fraction) -> Tuple[Tuple[Vector, Fraction], ...]:
    """Zero plus every dual vector with square in [target, 0), lexicographically sorted."""
    vecs = [L.zero()] + enumerate_dual_up_to(L, target)
    return tuple((v, square(L, v)) for v in sorted(vecs))


@lru_cache(maxsize=65536)
def _square(L: IrreducibleRootLattice, v: Vector) -> Fraction:
    return square(L, v)


def enumerate_candidates(C: Lattice, target_square) -> List[CandidateVector]:
    """All ``w`` outside ``C`` with the target square, in lexicographic order."""
    target = _check_target(target_square)
    _check_caps(C)
    comps = _components(C)
    options = [_options(c, target) for c in comps]
    # largest attainable (closest to zero) remaining contribution is 0, the smallest is the
    # sum of per-component minima; prune on the latter
    floor_after = [Fraction(0)] * (len(comps) + 1)
    for j in range(len(comps) - 1, -1, -1):
        floor_after[j] = floor_after[j + 1] + min(q for _, q in options[j])

    out: List[CandidateVector] = []
    chosen: List[Vector] = []
    squares: List[Fraction] = []

    def walk(j: int, remaining: Fraction) -> None:
        if j == len(comps):
            if remaining == 0 and not all(is_integral(v) for v in chosen):
                out.append(_make_candidate(comps, chosen, squares, target))
            return
        for v, q in options[j]:
            rest = remaining - q
            if rest > 0 or rest < floor_after[j + 1]:
                continue
            chosen.append(v)
            squares.append(q)
            walk(j + 1, rest)
            chosen.pop()
            squares.pop()

    walk(0, target)
    return out


def _make_candidate(comps, parts: Sequence[Vector], squares: Sequence[Fraction],
                    target: Fraction) -> CandidateVector:
    for c, v in zip(comps, parts):
        if is_integral(v) and any(v):
            raise InvariantViolation(f"lattice vector in component {c.name} of a candidate")
        if c.kind == "E" and c.rank == 8 and any(v):
            raise InvariantViolation("nonzero E8 component in a candidate")
    total = sum(squares, Fraction(0))
    if total != target:
        raise InvariantViolation(f"candidate square {total} != target {target}")
    classes = tuple(coset_of(c, v) for c, v in zip(comps, parts))
    return CandidateVector(tuple(parts), total, classes)


def certify(C: Lattice, w: CandidateVector) -> Certificate:
    """Reduce every non-lattice component of ``w``; the conclusion is computed from endpoints."""
    comps = _components(C)
    if len(w.components) != len(comps):
        raise RootLatticeError("candidate does not match the lattice decomposition")
    traces = []
    for j, (c, v) in enumerate(zip(comps, w.components)):
        if any(v) and not is_integral(v):
            traces.append((j, reduce_component(c, v)))
    conclusion = bool(traces) and all(x < 0 for _, t in traces for x in t.end)
    return Certificate(w, tuple(traces), conclusion)


@dataclass
class CertificationReport:
    lattice: str
    target: Fraction
    n_candidates: int = 0
    n_certified: int = 0
    failures: List[dict] = field(default_factory=list)
    classes: List[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and self.n_certified == self.n_candidates

    def to_json(self) -> dict:
        return {
            "lattice": self.lattice,
            "target": format_rational(self.target),
            "n_candidates": self.n_candidates,
            "n_certified": self.n_certified,
            "failures": self.failures,
            "classes": self.classes,
        }


def _check_certificate(C: Lattice, w: CandidateVector) -> Optional[str]:
    """None if ``w`` certifies cleanly, else a failure reason."""
    try:
        cert = certify(C, w)
    except (RootLatticeError, InvariantViolation) as exc:
        return f"{type(exc).__name__}: {exc}"
    comps = _components(C)
    for j, trace in cert.component_traces:
        check = _verified(comps[j], trace)
        if not check:
            return f"trace for component {j + 1} rejected: {check.reason}"
    if not cert.conclusion:
        return "endpoint with a non-negative coefficient"
    return None


@lru_cache(maxsize=None)
def _verified(L: IrreducibleRootLattice, trace: ReductionTrace):
    return verify_trace(L, trace)


def _check_chunk(args) -> List[Optional[str]]:
    C, chunk = args
    return [_check_certificate(C, w) for w in chunk]


def _worker_count(workers: Optional[int]) -> int:
    if workers is None:
        workers = int(os.environ.get("ROOTLAT_THREADS", "1") or 1)
    return max(1, workers)


def certify_all(C: Lattice, target_square, workers: Optional[int] = None,
                strict: bool = True) -> CertificationReport:
    """Certify every candidate; with ``strict`` a failure raises with a counterexample dump.

    ``workers`` (default: ``ROOTLAT_THREADS`` or 1) bounds process parallelism;
    results are aggregated in candidate order either way.
    """
    target = _check_target(target_square)
    candidates = enumerate_candidates(C, target)
    n_workers = _worker_count(workers)
    if n_workers > 1 and len(candidates) > 1:
        size = -(-len(candidates) // n_workers)
        chunks = [(C, candidates[i:i + size]) for i in range(0, len(candidates), size)]
        with ProcessPoolExecutor(max_workers=n_workers) as pool:
            reasons = [r for part in pool.map(_check_chunk, chunks) for r in part]
    else:
        reasons = _check_chunk((C, candidates))

    report = CertificationReport(C.name, target, n_candidates=len(candidates))
    by_class: dict = defaultdict(Counter)
    for w, reason in zip(candidates, reasons):
        if reason is None:
            report.n_certified += 1
        else:
            report.failures.append({"candidate": w.to_json(), "reason": reason})
        pattern = tuple(_square(c, v) for c, v in zip(_components(C), w.components))
        by_class[w.classes][pattern] += 1
    report.classes = [
        {
            "class": [list(c) for c in cls],
            "count": sum(patterns.values()),
            "decompositions": [
                {"squares": [format_rational(q) for q in pat], "count": cnt}
                for pat, cnt in sorted(patterns.items(), reverse=True)
            ],
        }
        for cls, patterns in sorted(by_class.items())
    ]
    if strict and report.failures:
        raise CertificationFailure(
            f"{len(report.failures)} of {report.n_candidates} candidates failed in {C.name}",
            {"lattice": C.name, "target": format_rational(target),
             "counterexample": report.failures[0], "report": report.to_json()},
        )
    return report
