"""Published discriminant and small-vector tables, and checks against fresh computation.

Each check produces :class:`CheckRow` records keyed by table name; the CLI
``verify-paper`` command prints them as a pass/fail matrix.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction as F
from typing import Dict, List, Tuple

from .exact import format_rational, is_integral
from .lattice import build_irreducible, discriminant_group, dual_basis_vector, square
from .small_vectors import enumerate_dual_up_to, kth_smallest

DISCRIMINANT = "discriminant-table"
SMALLEST = "smallest-vectors"
SECOND = "second-smallest"
THIRD = "third-smallest"
FOURTH = "fourth-smallest"
FIFTH = "fifth-smallest"
TABLES = (DISCRIMINANT, SMALLEST, SECOND, THIRD, FOURTH, FIFTH)

# every irreducible lattice the small-vector tables cover
SMALL_RANK_LATTICES = (
    [("A", n) for n in range(1, 9)] + [("D", n) for n in range(4, 9)]
    + [("E", 6), ("E", 7), ("E", 8)]
)
DISCRIMINANT_LATTICES = (
    [("A", n) for n in range(1, 13)] + [("D", n) for n in range(4, 13)]
    + [("E", 6), ("E", 7), ("E", 8)]
)


def expected_discriminant(kind: str, n: int):
    """(invariant factors, [(generator label, square)]) as tabulated."""
    if kind == "A":
        return (n + 1,), [("a1", F(-n, n + 1))]
    if kind == "D":
        if n % 2 == 0:
            return (2, 2), [("d1", F(-1)), (f"d{n}", F(-n, 4))]
        return (4,), [(f"d{n}", F(-n, 4))]
    return {6: ((3,), [("e6", F(-4, 3))]),
            7: ((2,), [("e7", F(-3, 2))]),
            8: ((), [])}[n]


def expected_small_vectors(kind: str, n: int) -> List[Tuple[F, Tuple[str, ...]]]:
    """Distinct values >= -2 of nonzero dual vectors with their orbit generators, closest to zero first.

    "root" names the orbit of lattice roots when it shares a value with dual vectors.
    """
    rows: List[Tuple[F, Tuple[str, ...]]] = []
    if kind == "A":
        rows.append((F(-n, n + 1), ("a1^",) if n == 1 else ("a1^", f"a{n}^")))
        if n == 3:
            rows.append((F(-1), ("a2^",)))
        elif n > 3:
            rows.append((F(-2 * (n - 1), n + 1), ("a2^", f"a{n - 1}^")))
        if n == 5:
            rows.append((F(-3, 2), ("a3^",)))
        elif n in (6, 7):
            rows.append((F(-3 * (n - 2), n + 1), ("a3^", f"a{n - 2}^")))
        elif n == 8:
            rows.append((F(-2), ("a3^", "a6^", "root")))
        if n == 7:
            rows.append((F(-2), ("a4^", "root")))
    elif kind == "D":
        if n == 4:
            rows.append((F(-1), ("d1^", "d3^", "d4^")))
        else:
            rows.append((F(-1), ("d1^",)))
            if n < 8:
                rows.append((F(-n, 4), (f"d{n - 1}^", f"d{n}^")))
            elif n == 8:
                rows.append((F(-2), ("d7^", "d8^", "root")))
    elif kind == "E" and n == 6:
        rows.append((F(-4, 3), ("e2^", "e6^")))
    elif kind == "E" and n == 7:
        rows.append((F(-3, 2), ("e7^",)))
    if not rows or rows[-1][0] != -2:
        rows.append((F(-2), ("root",)))
    return rows


# Generators exactly as printed in the published smallest-vector table where the
# printed labels disagree with the vertex labelling used here.
PRINTED_LABEL_DISCREPANCIES: Dict[Tuple[str, int], Tuple[str, ...]] = {
    ("D", 4): ("d1^", "d2^", "d3^"),
}


@dataclass
class CheckRow:
    table: str
    lattice: str
    passed: bool
    expected: dict
    computed: dict

    def to_json(self) -> dict:
        return {"table": self.table, "lattice": self.lattice, "passed": self.passed,
                "expected": self.expected, "computed": self.computed}


@dataclass
class VerificationResult:
    rows: List[CheckRow] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def to_json(self) -> dict:
        summary = {t: all(r.passed for r in self.rows if r.table == t) for t in TABLES}
        return {"passed": self.passed, "tables": summary,
                "rows": [r.to_json() for r in self.rows], "notes": self.notes}


def _fmt_values(pairs):
    return [[lab, format_rational(q)] for lab, q in pairs]


def _generated_subgroup_size(L, gens, orders) -> int:
    classes = set()
    for coeffs in itertools.product(*(range(d) for d in orders)):
        v = [sum((c * g[k] for c, g in zip(coeffs, gens)), F(0)) for k in range(L.rank)]
        classes.add(tuple(x % 1 for x in v))
    return len(classes)


def _element_order(g) -> int:
    m = 1
    while not is_integral([m * x for x in g]):
        m += 1
    return m


def check_discriminant(kind: str, n: int) -> CheckRow:
    L = build_irreducible(kind, n)
    factors, gens = expected_discriminant(kind, n)
    group = discriminant_group(L)
    vectors = [dual_basis_vector(L, L.label_index(lab)) for lab, _ in gens]
    computed_squares = [square(L, v) for v in vectors]
    orders = [_element_order(v) for v in vectors]
    det = abs(L.determinant)
    size = _generated_subgroup_size(L, vectors, factors)
    passed = (
        group.invariant_factors == tuple(factors)
        and [lab for lab, _ in group.generators] == [lab for lab, _ in gens]
        and list(group.generator_squares) == [q for _, q in gens]
        and computed_squares == [q for _, q in gens]
        and orders == list(factors)
        and size == det
    )
    return CheckRow(
        DISCRIMINANT, L.name, passed,
        expected={"invariant_factors": list(factors), "generators": _fmt_values(gens)},
        computed={
            "invariant_factors": list(group.invariant_factors),
            "generators": _fmt_values(zip([lab for lab, _ in group.generators],
                                          group.generator_squares)),
            "abs_det": det,
            "generator_orders": orders,
            "generated_subgroup_size": size,
        },
    )


def _report_row(table: str, kind: str, n: int, k: int, value: F, gens) -> CheckRow:
    L = build_irreducible(kind, n)
    rep = kth_smallest(L, k)
    computed_gens = list(rep.generators())
    passed = rep.norm_value == value and computed_gens == list(gens)
    return CheckRow(
        table, L.name, passed,
        expected={"k": k, "value": format_rational(value), "generators": list(gens)},
        computed={"k": k, "value": format_rational(rep.norm_value),
                  "generators": computed_gens, "sizes": [o.size for o in rep.orbits]},
    )


def check_small_vectors(kind: str, n: int, k: int) -> CheckRow:
    table = {1: SMALLEST, 2: SECOND, 3: THIRD, 4: FOURTH}[k]
    value, gens = expected_small_vectors(kind, n)[k - 1]
    return _report_row(table, kind, n, k, value, gens)


def check_third_cutoff(n: int) -> CheckRow:
    """For A_n with n >= 9 the dual vector a3^ already has square below -2."""
    L = build_irreducible("A", n)
    q = square(L, dual_basis_vector(L, 3))
    rep = kth_smallest(L, 3)
    passed = q < -2 and q == F(-3 * (n - 2), n + 1) and rep.generators() == ("root",)
    return CheckRow(
        THIRD, L.name, passed,
        expected={"a3^ square": format_rational(F(-3 * (n - 2), n + 1)), "below": "-2",
                  "k3 generators": ["root"]},
        computed={"a3^ square": format_rational(q), "k3 generators": list(rep.generators())},
    )


def check_fifth(kind: str, n: int) -> CheckRow:
    """At most four distinct nonzero dual norms lie in [-2, 0)."""
    L = build_irreducible(kind, n)
    values = sorted({square(L, v) for v in enumerate_dual_up_to(L, -2)}, reverse=True)
    expected = [q for q, _ in expected_small_vectors(kind, n)]
    return CheckRow(
        FIFTH, L.name, len(values) <= 4 and values == expected,
        expected={"values >= -2": [format_rational(q) for q in expected], "max_count": 4},
        computed={"values >= -2": [format_rational(q) for q in values]},
    )


def verify_all() -> VerificationResult:
    result = VerificationResult()
    rows = result.rows
    rows.extend(check_discriminant(k, n) for k, n in DISCRIMINANT_LATTICES)

    for kind, n in SMALL_RANK_LATTICES:
        if (kind, n) != ("E", 8):
            rows.append(check_small_vectors(kind, n, 1))
    # second smallest: formula rows, then lattices where only roots reach -2
    for n in range(3, 9):
        rows.append(check_small_vectors("A", n, 2))
    for n in range(5, 9):
        rows.append(check_small_vectors("D", n, 2))
    for kind, n in [("A", 1), ("A", 2), ("D", 4), ("E", 6), ("E", 7)]:
        rows.append(check_small_vectors(kind, n, 2))
    for n in range(5, 9):
        rows.append(check_small_vectors("A", n, 3))
    rows.extend(check_third_cutoff(n) for n in (9, 10))
    rows.append(check_small_vectors("A", 7, 4))
    rows.extend(check_fifth(kind, n) for kind, n in SMALL_RANK_LATTICES)

    for (kind, n), printed in sorted(PRINTED_LABEL_DISCREPANCIES.items()):
        computed = kth_smallest(build_irreducible(kind, n), 1).generators()
        if tuple(printed) != tuple(computed):
            result.notes.append(
                f"{kind}{n} smallest-vector generators: reference table prints "
                f"{', '.join(printed)}; computed {', '.join(computed)} "
                f"(duals of the outer vertices; d2 is the branch vertex and d2^ lies in the lattice)"
            )
    return result
