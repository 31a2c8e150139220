"""Command-line front end: ``rootlat <command> LATTICE [options]``.

Exit status: 0 success, 1 domain error, 2 parse error, 3 internal failure
(with a JSON dump on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .certifier import certify_all
from .errors import (
    CertificationFailure,
    InvariantViolation,
    LatticeSpecError,
    RootLatticeError,
)
from .exact import format_rational, format_vector, parse_vector_literal
from .lattice import (
    CompositeLattice,
    IrreducibleRootLattice,
    discriminant_group,
    parse_lattice_spec,
)
from .reduction import reduce_component
from .reference import verify_all
from .small_vectors import kth_smallest
from .weyl import DEFAULT_ORBIT_CAP, orbit

COMMANDS = ("gram", "disc", "shortvec", "orbit", "reduce", "certify", "verify-paper")


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep argparse's exit code 2 but route through main()
        raise LatticeSpecError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rootlat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text, lattice=True):
        p = sub.add_parser(name, help=help_text)
        if lattice:
            p.add_argument("lattice", help='lattice spec such as "A2+A2+A2" or "4*A2"')
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    add("gram", "print the Gram matrix")
    add("disc", "discriminant group, generators and their squares")
    p = add("shortvec", "k-th smallest nonzero dual vectors and their orbits")
    p.add_argument("--k", type=int, default=1)
    p = add("orbit", "Weyl orbit of a vector")
    p.add_argument("--vector", required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_ORBIT_CAP)
    p = add("reduce", "reflection reduction of a small dual vector")
    p.add_argument("--vector", required=True)
    p = add("certify", "certify all square -1/-2 vectors outside the lattice")
    p.add_argument("--target", type=int, choices=(-1, -2), default=-2)
    add("verify-paper", "reproduce the discriminant and small-vector tables", lattice=False)
    return parser


def _vector_for(L, literal: str):
    parts = parse_vector_literal(literal)
    if isinstance(L, CompositeLattice):
        return L.join(parts)
    if len(parts) != 1:
        raise LatticeSpecError("irreducible lattice expects a single vector component")
    return parts[0]


def _fmt(v) -> str:
    return "(" + ", ".join(format_vector(v)) + ")"


def _cmd_gram(L, args):
    data = {"lattice": L.name, "labels": list(L.labels), "gram": [list(r) for r in L.gram]}
    width = max(len(str(x)) for r in L.gram for x in r)
    lines = [L.name] + [" ".join(str(x).rjust(width) for x in r) for r in L.gram]
    return data, lines


def _cmd_disc(L, args):
    comps = []
    lines = []
    for c in L.components:
        g = discriminant_group(c)
        gens = [{"label": f"{lab}^", "vector": format_vector(v), "square": format_rational(q)}
                for (lab, v), q in zip(g.generators, g.generator_squares)]
        comps.append({"lattice": c.name, "invariant_factors": list(g.invariant_factors),
                      "generators": gens})
        text = "; ".join([g.describe()] + [f"{x['label']}: {x['square']}" for x in gens])
        lines.append(text if len(L.components) == 1 else f"{c.name}: {text}")
    return {"lattice": L.name, "components": comps}, lines


def _cmd_shortvec(L, args):
    rep = kth_smallest(L, args.k)
    orbits = [{"generator": o.generator_label, "size": o.size,
               "sample": format_vector(o.representative),
               "in_dual_minus_lattice": o.in_dual_minus_lattice} for o in rep.orbits]
    data = {"lattice": L.name, "k": rep.k, "value": format_rational(rep.norm_value),
            "orbits": orbits}
    lines = [f"{L.name}  k={rep.k}  value {format_rational(rep.norm_value)}  "
             f"orbits {len(orbits)}"]
    for o, summary in zip(orbits, rep.orbits):
        where = "dual\\lattice" if o["in_dual_minus_lattice"] else "lattice"
        lines.append(f"  {o['generator']:<8} size {o['size']:<6} {where:<13} "
                     f"sample {_fmt(summary.representative)}")
    return data, lines


def _cmd_orbit(L, args):
    w = _vector_for(L, args.vector)
    o = orbit(L, w, cap=args.cap, keep_elements=True)
    data = {"lattice": L.name, "representative": format_vector(o.representative),
            "generator": o.generator_label, "size": o.size,
            "square": format_rational(o.square),
            "elements": [format_vector(e) for e in o.sorted_elements()]}
    lines = [f"{L.name}  orbit size {o.size}  square {format_rational(o.square)}",
             f"  representative {_fmt(o.representative)}  ({o.generator_label})"]
    return data, lines


def _cmd_reduce(L, args):
    if not isinstance(L, IrreducibleRootLattice):
        raise RootLatticeError("reduce works on a single irreducible lattice")
    trace = reduce_component(L, _vector_for(L, args.vector))
    lines = [f"{L.name}  start {_fmt(trace.start)}"]
    for s in trace.steps:
        lines.append(f"  - {L.labels[s.j - 1]:<4} -> {_fmt(s.vector)}")
    n = len(trace.steps)
    lines.append(f"  end {_fmt(trace.end)} = {trace.end_vertex}^  ({n} step{'' if n == 1 else 's'})")
    return trace.to_json(), lines


def _cmd_certify(L, args):
    report = certify_all(L, args.target)
    lines = [f"{L.name}  target {args.target}  candidates {report.n_candidates}  "
             f"certified {report.n_certified}  failures {len(report.failures)}"]
    for cls in report.classes:
        pats = ", ".join(f"({' '.join(d['squares'])}) x{d['count']}" for d in cls["decompositions"])
        lines.append(f"  class {cls['class']}: {cls['count']}  [{pats}]")
    return report.to_json(), lines


def _cmd_verify(args):
    result = verify_all()
    lines = []
    for row in result.rows:
        mark = "PASS" if row.passed else "FAIL"
        lines.append(f"{mark}  {row.table:<19} {row.lattice:<4} "
                     f"{json.dumps(row.computed, separators=(',', ':'))}")
    for table, ok in result.to_json()["tables"].items():
        lines.append(f"{'PASS' if ok else 'FAIL'}  {table} (all rows)")
    lines.extend(f"note: {n}" for n in result.notes)
    return result.to_json(), lines, result.passed


HANDLERS = {"gram": _cmd_gram, "disc": _cmd_disc, "shortvec": _cmd_shortvec,
            "orbit": _cmd_orbit, "reduce": _cmd_reduce, "certify": _cmd_certify}


def _attach_values(argv: List[str]) -> List[str]:
    # vector literals often start with "-", which argparse would read as a flag
    out, i = [], 0
    while i < len(argv):
        if argv[i] in ("--vector", "--target") and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def run(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(_attach_values(argv))
        ok = True
        if args.command == "verify-paper":
            data, lines, ok = _cmd_verify(args)
        else:
            L = parse_lattice_spec(args.lattice)
            data, lines = HANDLERS[args.command](L, args)
    except LatticeSpecError as exc:
        print(f"parse error: {exc}", file=err)
        return 2
    except CertificationFailure as exc:
        print(f"certification failure: {exc}", file=err)
        print(json.dumps(exc.counterexample, indent=2), file=err)
        return 3
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=err)
        print(json.dumps({"error": type(exc).__name__, "message": str(exc),
                          "argv": argv}, indent=2), file=err)
        return 3
    except RootLatticeError as exc:
        print(f"error: {exc}", file=err)
        return 1
    if args.format == "json":
        print(json.dumps(data, indent=2), file=out)
    else:
        print("\n".join(lines), file=out)
    return 0 if ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
