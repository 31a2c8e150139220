from dataclasses import replace
from fractions import Fraction as F
import random

import pytest
from hypothesis import given, settings, strategies as st

from rootlat.errors import InLatticeError, NotInDualError, OutOfScopeNormError
from rootlat.lattice import build_irreducible, coset_of, dual_basis_vector, square
from rootlat.reduction import ReductionStep, reduce_component, verify_trace
from rootlat.small_vectors import in_scope_orbits
from rootlat.weyl import reflect, simple_vertices

UP_TO_8 = [("A", n) for n in range(1, 9)] + [("D", n) for n in range(4, 9)] + \
    [("E", 6), ("E", 7)]


def test_a3_single_step():
    a3 = build_irreducible("A", 3)
    t = reduce_component(a3, (F(-1, 2), F(0), F(-1, 2)))
    assert [s.j for s in t.steps] == [2]
    assert t.end == dual_basis_vector(a3, 2) and t.end_vertex == "a2"


def test_simple_vertex_dual_is_terminal():
    e7 = build_irreducible("E", 7)
    t = reduce_component(e7, dual_basis_vector(e7, 7))
    assert t.steps == () and t.end_vertex == "e7"


def test_a2_negated_dual_reduces_within_its_class():
    a2 = build_irreducible("A", 2)
    start = (F(1, 3), F(2, 3))
    t = reduce_component(a2, start)
    assert t.end == dual_basis_vector(a2, 1)
    assert len(t.steps) == sum(start) - sum(t.end) == 2
    assert coset_of(a2, t.end) == coset_of(a2, start)


def test_scope_errors():
    a2 = build_irreducible("A", 2)
    with pytest.raises(NotInDualError):
        reduce_component(a2, (F(1, 2), F(0)))
    with pytest.raises(InLatticeError):
        reduce_component(a2, (F(1), F(0)))
    a4 = build_irreducible("A", 4)
    # 2 * a1^ has square -16/5
    with pytest.raises(OutOfScopeNormError):
        reduce_component(a4, tuple(2 * x for x in dual_basis_vector(a4, 1)))


def test_unknown_tie_break():
    with pytest.raises(ValueError):
        reduce_component(build_irreducible("A", 2), (F(1, 3), F(2, 3)), tie_break="middle")


def test_verify_trace_round_trip_and_forgeries():
    d5 = build_irreducible("D", 5)
    start = dual_basis_vector(d5, 1)
    for j in (1, 2, 3):
        start = reflect(d5, start, j)
    t = reduce_component(d5, start)
    assert t.steps and verify_trace(d5, t)

    bad_step = replace(t.steps[0], vector=tuple(x + 1 for x in t.steps[0].vector))
    forged = replace(t, steps=(bad_step,) + t.steps[1:])
    assert verify_trace(d5, forged).reason == "step-mismatch"

    # a zero-step trace that claims an endpoint which is not negative
    positive = tuple(-x for x in dual_basis_vector(d5, 1))
    forged = replace(t, start=positive, steps=(), end=positive)
    assert verify_trace(d5, forged).reason == "end-not-negative"

    assert verify_trace(d5, replace(t, end_vertex="d2")).reason == "end-vertex-mismatch"
    assert verify_trace(build_irreducible("D", 6), t).reason == "lattice-mismatch"
    extra = ReductionStep(1, t.end)
    assert not verify_trace(d5, replace(t, steps=t.steps + (extra,)))


@pytest.mark.parametrize("kind,n", UP_TO_8, ids=[f"{k}{n}" for k, n in UP_TO_8])
def test_every_in_scope_vector_reduces(kind, n):
    L = build_irreducible(kind, n)
    ends = {dual_basis_vector(L, i) for i in simple_vertices(L)}
    for o in in_scope_orbits(L):
        for w in o.elements:
            t = reduce_component(L, w)
            assert verify_trace(L, t)
            assert t.end in ends
            assert len(t.steps) == sum(w) - sum(t.end)
            assert square(L, t.end) == square(L, w)
            assert coset_of(L, t.end) == coset_of(L, w)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(UP_TO_8), st.integers(0, 2**32 - 1))
def test_endpoint_independent_of_tie_break(kn, seed):
    L = build_irreducible(*kn)
    rng = random.Random(seed)
    orbits = in_scope_orbits(L)
    w = rng.choice(sorted(rng.choice(orbits).elements))
    a, b = reduce_component(L, w), reduce_component(L, w, tie_break="largest")
    assert a.end == b.end and len(a.steps) == len(b.steps)
    assert verify_trace(L, b)
