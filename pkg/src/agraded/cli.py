"""Command line front end.

Exit codes: 0 success / property holds, 1 property violated, 2 bad input.
Every report ends with ``#``-prefixed ``key=value`` summary lines.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import binomial as bn
from . import counterexample
from .decomposition import (
    associated_primes,
    chain_check,
    primary_decomposition,
    redundant_components,
    verify_decomposition,
)
from .exponents import InputError, MonomialIdeal, default_names, monomial_str, staircase_bounds
from .formats import (
    format_ideal,
    parse_ideal,
    parse_matrix,
    parse_permutation,
    parse_vector,
    read_text,
)
from .grading import agraded_verify, enumerate_agraded, triangulation
from .standard_pairs import compute_standard_pairs, root_maximal_pairs
from .toric import TermOrder, initial_ideal, toric_groebner

OK, VIOLATED, USAGE = 0, 1, 2


def _face(face, names) -> str:
    return "{" + ",".join(names[i] for i in sorted(face)) + "}"


def _prime(face, names) -> str:
    gens = [names[i] for i in range(len(names)) if i not in face]
    return "(" + ", ".join(gens) + ")" if gens else "(0)"


def _load_ideal(path):
    return parse_ideal(read_text(path))


def _load_matrix(path):
    return parse_matrix(read_text(path))


def _monomial_view(ideal, box) -> MonomialIdeal:
    """The ideal itself, or the monomials inside a binomial ideal."""
    if isinstance(ideal, MonomialIdeal):
        return ideal
    return bn.monomial_part(ideal, box)


def _box(args, n):
    return parse_vector(args.box, n) if getattr(args, "box", None) else None


def _summary(**kv) -> list[str]:
    return [f"# {k}={v}" for k, v in kv.items()]


def _order(args, n, names) -> TermOrder:
    weight = parse_vector(args.weights, n) if args.weights else (1,) * n
    tiebreak = parse_permutation(args.tiebreak, names) if args.tiebreak else tuple(range(n))
    return TermOrder(weight, tiebreak)


# -- commands --------------------------------------------------------------------------

def cmd_std_pairs(args):
    ideal = _load_ideal(args.ideal)
    T = _monomial_view(ideal, _box(args, ideal.n))
    basis = compute_standard_pairs(T)
    names = T.variables
    top = set(root_maximal_pairs(basis))
    lines = sorted(f"pair {monomial_str(p.root, names)} {_face(p.face, names)}"
                   + (" maximal" if p in top else "") for p in basis)
    return OK, lines + _summary(pairs=len(basis), root_maximal=len(top))


def cmd_ass_primes(args):
    ideal = _load_ideal(args.ideal)
    T = _monomial_view(ideal, _box(args, ideal.n))
    names = T.variables
    faces = associated_primes(compute_standard_pairs(T))
    lines = sorted(f"prime {_prime(f, names)} face={_face(f, names)} height={T.n - len(f)}"
                   for f in faces)
    return OK, lines + _summary(primes=len(faces))


def cmd_chain_check(args):
    ideal = _load_ideal(args.ideal)
    T = _monomial_view(ideal, _box(args, ideal.n))
    names = T.variables
    report = chain_check(compute_standard_pairs(T))
    lines = sorted(f"violation face={_face(f, names)} prime={_prime(f, names)}"
                   for f in report.violations)
    summary = _summary(holds=str(report.holds).lower(), faces=len(report.faces),
                       violations=";".join(_face(f, names) for f in report.violations))
    return (OK if report.holds else VIOLATED), lines + summary


def cmd_decompose(args):
    ideal = _load_ideal(args.ideal)
    names = ideal.variables
    if isinstance(ideal, MonomialIdeal):
        basis = compute_standard_pairs(ideal)
        comps = primary_decomposition(basis)
        box = _box(args, ideal.n) or tuple(x + 2 for x in staircase_bounds(ideal))
        redundant = set(redundant_components(ideal, comps, box))
        lines = []
        for c in comps:
            gens = ", ".join(monomial_str(g, names) for g in c.ideal.generators)
            flag = " redundant" if c.face in redundant else ""
            lines.append(f"component face={_face(c.face, names)} height={c.height}: ({gens}){flag}")
        return OK, sorted(lines) + _summary(components=len(comps), box=",".join(map(str, box)))
    box = _box(args, ideal.n) or ideal.default_box()
    T = bn.monomial_part(ideal, box)
    faces = compute_standard_pairs(T).faces if not T.is_unit else []
    lines = []
    for face in faces:
        comp = bn.binomial_component(ideal, face, box)
        body = format_ideal(comp).splitlines()[1:]
        lines.append(f"component face={_face(face, names)}: ({', '.join(body)})")
    return OK, sorted(lines) + _summary(components=len(faces), box=",".join(map(str, box)))


def cmd_verify_agraded(args):
    ideal = _load_ideal(args.ideal)
    A = _load_matrix(args.matrix)
    if not isinstance(ideal, MonomialIdeal):
        raise InputError("verify-agraded expects a monomial ideal")
    box = parse_vector(args.box, A.d)
    report = agraded_verify(ideal, A, box)
    lines = sorted(f"offending degree={','.join(map(str, q))} standard={c}"
                   for q, c in report.offending.items())
    summary = _summary(holds=str(report.ok).lower(), degrees=report.degrees_checked,
                       offending=len(report.offending), box=",".join(map(str, box)),
                       certified="up-to-box")
    return (OK if report.ok else VIOLATED), lines + summary


def cmd_triangulate(args):
    ideal = _load_ideal(args.ideal)
    A = _load_matrix(args.matrix)
    if not isinstance(ideal, MonomialIdeal):
        raise InputError("triangulate expects a monomial ideal")
    report = triangulation(compute_standard_pairs(ideal), A)
    names = ideal.variables
    lines = sorted(f"cell {_face(c.face, names)} rays="
                   + " ".join("(" + ",".join(map(str, r)) + ")" for r in c.rays)
                   for c in report.cells)
    lines += sorted(f"violation {v}" for v in report.violations)
    summary = _summary(valid=str(report.ok).lower(), cells=len(report.cells))
    return (OK if report.ok else VIOLATED), lines + summary


def cmd_toric_gb(args):
    A = _load_matrix(args.matrix)
    names = default_names(A.n)
    G = toric_groebner(A, _order(args, A.n, names))
    lines = sorted(f"{monomial_str(g.lead, names)} - {monomial_str(g.tail, names)}" for g in G)
    return OK, lines + _summary(elements=len(G))


def cmd_initial(args):
    A = _load_matrix(args.matrix)
    names = default_names(A.n)
    G = toric_groebner(A, _order(args, A.n, names))
    return OK, format_ideal(initial_ideal(G, names)).splitlines()


def cmd_saturated_check(args):
    ideal = _load_ideal(args.ideal)
    if isinstance(ideal, MonomialIdeal):
        ideal = bn.BinomialIdeal.from_monomial(ideal)
    report = bn.is_saturated(ideal, _box(args, ideal.n))
    names = ideal.variables
    lines = sorted("lattice " + ",".join(map(str, v)) for v in report.lattice.basis)
    if report.witness:
        a, b = report.witness
        lines.append(f"witness {monomial_str(a, names)} - {monomial_str(b, names)}")
    summary = _summary(saturated=str(report.saturated).lower(), rank=report.lattice.rank,
                       box=",".join(map(str, report.box)), certified="up-to-box")
    return (OK if report.saturated else VIOLATED), lines + summary


def cmd_verify_decomposition(args):
    ideal = _load_ideal(args.ideal)
    box = _box(args, ideal.n)
    if isinstance(ideal, MonomialIdeal):
        box = box or tuple(x + 2 for x in staircase_bounds(ideal))
        comps = primary_decomposition(compute_standard_pairs(ideal))
        holds = verify_decomposition(ideal, comps, box)
        lines = [f"components={len(comps)}"]
    else:
        try:
            report = bn.verify_primary_decomposition(ideal, box)
        except bn.PreconditionError as exc:
            return VIOLATED, [f"precondition {exc}"] + _summary(holds="false")
        holds, box = report.holds, report.box
        lines = [f"components={len(report.components)}"]
        lines += sorted("failure at " + ",".join(map(str, p)) for p in report.failures)
    summary = _summary(holds=str(holds).lower(), box=",".join(map(str, box)),
                       certified="up-to-box")
    return (OK if holds else VIOLATED), lines + summary


def cmd_enumerate_agraded(args):
    A = _load_matrix(args.matrix)
    names = default_names(A.n)
    cands = enumerate_agraded(A, args.bound)
    lines = sorted("candidate (" + ", ".join(monomial_str(g, names) for g in c.ideal.generators)
                   + ")" for c in cands)
    return OK, lines + _summary(candidates=len(cands), bound=args.bound, certified="up-to-bound")


def cmd_counterexample(args):
    box = parse_vector(args.box, 3) if args.box else counterexample.DEFAULT_BOX
    report = counterexample.verify(box)
    return (OK if report.ok else VIOLATED), report.lines()


# -- wiring ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="agraded", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def ideal_cmd(name, func, help_, box=False, matrix=False):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("ideal", help="ideal file")
        if matrix:
            sp.add_argument("matrix", help="grading matrix file")
        if box:
            sp.add_argument("--box", help="comma-separated box bounds")
        sp.set_defaults(func=func)
        return sp

    ideal_cmd("std-pairs", cmd_std_pairs, "list the standard pairs", box=True)
    ideal_cmd("decompose", cmd_decompose, "primary decomposition from standard pairs", box=True)
    ideal_cmd("ass-primes", cmd_ass_primes, "associated primes", box=True)
    ideal_cmd("chain-check", cmd_chain_check, "audit the chain property", box=True)
    sp = ideal_cmd("verify-agraded", cmd_verify_agraded, "bounded A-graded check", matrix=True)
    sp.add_argument("--box", required=True, help="degree bounds, e.g. 6,6,6")
    ideal_cmd("triangulate", cmd_triangulate, "cells of the induced triangulation", matrix=True)
    ideal_cmd("saturated-check", cmd_saturated_check, "saturation and K(I) on a box", box=True)
    ideal_cmd("verify-decomposition", cmd_verify_decomposition,
              "check I equals the intersection of its components on a box", box=True)

    for name, func, help_ in (("toric-gb", cmd_toric_gb, "reduced Gröbner basis of the toric ideal"),
                              ("initial", cmd_initial, "initial ideal of the toric ideal")):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("matrix")
        sp.add_argument("--weights", help="comma-separated non-negative weights")
        sp.add_argument("--tiebreak", help="variable order for ties, names or indices")
        sp.set_defaults(func=func)

    sp = sub.add_parser("enumerate-agraded", help="bounded enumeration of A-graded staircases")
    sp.add_argument("matrix")
    sp.add_argument("--bound", type=int, required=True,
                    help="largest certificate value of the degrees considered")
    sp.set_defaults(func=cmd_enumerate_agraded)

    sp = sub.add_parser("counterexample", help="the 16-variable example")
    csub = sp.add_subparsers(dest="action", required=True)
    vp = csub.add_parser("verify", help="run every check and report")
    vp.add_argument("--box", help="degree box, default 6,6,6")
    vp.set_defaults(func=cmd_counterexample)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, lines = args.func(args)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    for line in lines:
        print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
