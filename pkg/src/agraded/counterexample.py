"""A monomial A-graded ideal in 16 variables with d = 3 whose associated
primes do not form chains.

Variables, in order: e1 e2 e3, f1 f2 f3, g1 g2 g3, k1 .. k7. Index
arithmetic on the triples is mod 3 via the explicit NEXT/PREV tables.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .decomposition import associated_primes, chain_check
from .exponents import MonomialIdeal, Exponent
from .grading import (
    GradingMap,
    agraded_verify,
    is_pointed,
    quotient_group,
    triangulation,
)
from .standard_pairs import StandardPair, StandardPairBasis, compute_standard_pairs, layer

VARIABLES = (
    "e1", "e2", "e3",
    "f1", "f2", "f3",
    "g1", "g2", "g3",
    "k1", "k2", "k3", "k4", "k5", "k6", "k7",
)
N = len(VARIABLES)
TRIPLE = (0, 1, 2)
NEXT = {0: 1, 1: 2, 2: 0}
PREV = {0: 2, 1: 0, 2: 1}
K_IMAGES = ((3, 2, 2), (2, 3, 2), (2, 2, 3), (2, 3, 3), (3, 2, 3), (3, 3, 2), (3, 3, 3))
DEFAULT_BOX = (6, 6, 6)


def e(i): return i
def f(i): return 3 + i
def g(i): return 6 + i
def k(nu): return 9 + nu  # nu = 0..6


def mono(*indices: int) -> Exponent:
    a = [0] * N
    for i in indices:
        a[i] += 1
    return tuple(a)


def generator_families() -> dict[str, list[Exponent]]:
    """The four bullet families of generators, before minimalization."""
    ks = range(7)
    fam1 = (
        [mono(f(i), k(v)) for i in TRIPLE for v in ks]
        + [mono(g(i), k(v)) for i in TRIPLE for v in ks]
        + [mono(g(i), g(j)) for i in TRIPLE for j in TRIPLE if i <= j]
        + [mono(k(v), k(m)) for v in ks for m in ks if v <= m]
    )
    fam2 = (
        [mono(f(i), f(i)) for i in TRIPLE]
        + [mono(f(i), g(NEXT[i])) for i in TRIPLE]
        + [mono(f(PREV[i]), f(i), g(PREV[i])) for i in TRIPLE]
    )
    fam3 = (
        [mono(f(i), g(i), e(PREV[i])) for i in TRIPLE]
        + [mono(f(NEXT[i]), g(i), e(PREV[i])) for i in TRIPLE]
        + [mono(f(i), f(NEXT[i]), e(PREV[i])) for i in TRIPLE]
    )
    fam4 = (
        [mono(f(i), e(PREV[i]), e(NEXT[i])) for i in TRIPLE]
        + [mono(g(i), e(PREV[i]), e(NEXT[i])) for i in TRIPLE]
    )
    return {"products": fam1, "f-g": fam2, "with one e": fam3, "with two e": fam4}


def grading_columns() -> list[tuple[int, int, int]]:
    cols: list[tuple[int, int, int]] = [None] * N  # type: ignore[list-item]
    for i in TRIPLE:
        unit = [0, 0, 0]
        unit[i] = 1
        cols[e(i)] = tuple(2 * x for x in unit)
        cols[f(i)] = tuple(unit)
        cols[g(i)] = tuple(x + 1 for x in unit)
    for v, img in enumerate(K_IMAGES):
        cols[k(v)] = img
    return cols


def build() -> tuple[MonomialIdeal, GradingMap]:
    gens = [a for fam in generator_families().values() for a in fam]
    ideal = MonomialIdeal(N, tuple(gens), VARIABLES)
    return ideal, GradingMap.from_columns(grading_columns())


def expected_standard_pairs() -> StandardPairBasis:
    """The 30 pairs, transcribed family by family."""
    es = frozenset(e(i) for i in TRIPLE)

    def side(i):
        return frozenset({e(i), e(NEXT[i])})

    pairs = []
    pairs += [StandardPair(mono(k(v)), es) for v in range(7)]                    # (i)
    for i in TRIPLE:                                                            # (ii)
        j = NEXT[i]
        pairs += [
            StandardPair(mono(f(i), f(j)), side(i)),
            StandardPair(mono(f(i), g(i)), side(i)),
            StandardPair(mono(f(j), g(i)), side(i)),
        ]
    pairs += [StandardPair(mono(g(NEXT[i])), side(i)) for i in TRIPLE]            # (iii)
    pairs += [StandardPair(mono(f(0), f(1), f(2)), frozenset())]                # (iv)
    pairs += [StandardPair(mono(), es)]                                          # (v)
    for i in TRIPLE:                                                            # (vi)
        pairs += [
            StandardPair(mono(f(i)), side(i)),
            StandardPair(mono(f(NEXT[i])), side(i)),
            StandardPair(mono(g(i)), side(i)),
        ]
    ideal, _ = build()
    return StandardPairBasis(ideal, tuple(sorted(pairs, key=StandardPair.sort_key)))


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class VerificationReport:
    box: tuple[int, ...]
    checks: list[Check] = field(default_factory=list)
    chain_violations: list[frozenset] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def lines(self) -> list[str]:
        out = [f"{'PASS' if c.ok else 'FAIL'} {c.name}: {c.detail}" for c in self.checks]
        faces = ";".join("{" + ",".join(VARIABLES[i] for i in sorted(fc)) + "}"
                         for fc in self.chain_violations)
        out += [
            f"# verdict={'PASS' if self.ok else 'FAIL'}",
            f"# box={','.join(map(str, self.box))}",
            f"# chain_violations={faces}",
        ]
        return out


def verify(box: Sequence[int] = DEFAULT_BOX) -> VerificationReport:
    """Run every check on the example and collect the results."""
    box = tuple(box)
    report = VerificationReport(box)
    add = report.checks.append
    ideal, A = build()

    add(Check("generator count", len(ideal) == 100, f"{len(ideal)} minimal generators"))

    cert = is_pointed(A)
    add(Check("pointed grading", cert.pointed, f"certificate {cert.vector}"))

    basis = compute_standard_pairs(ideal)
    expected = expected_standard_pairs()
    missing = set(expected.pairs) - set(basis.pairs)
    extra = set(basis.pairs) - set(expected.pairs)
    detail = f"{len(basis)} computed, {len(expected)} expected"
    if missing or extra:
        detail += (f"; missing {[p.describe(VARIABLES) for p in missing]}"
                   f"; extra {[p.describe(VARIABLES) for p in extra]}")
    add(Check("standard pairs", not missing and not extra, detail))

    faces = associated_primes(basis)
    report.chain_violations = list(chain_check(basis).violations)
    add(Check("associated primes", len(faces) == 5, f"{len(faces)} faces"))
    add(Check("chain property violated exactly at the empty face",
              report.chain_violations == [frozenset()],
              f"violations {[sorted(v) for v in report.chain_violations]}"))

    graded = agraded_verify(ideal, A, box)
    f123 = mono(f(0), f(1), f(2))
    detail = f"{graded.degrees_checked} degrees, {len(graded.offending)} offending"
    add(Check("A-graded on box", graded.ok, detail))
    add(Check("degree (1,1,1) comes from f1 f2 f3",
              graded.standard.get((1, 1, 1)) == f123,
              ideal.monomial_str(graded.standard.get((1, 1, 1), mono()))))

    tri = triangulation(basis, A)
    es = frozenset(e(i) for i in TRIPLE)
    single = [c.face for c in tri.cells] == [es]
    add(Check("triangulation is the positive octant", tri.ok and single,
              f"{len(tri.cells)} cell(s), {len(tri.violations)} violation(s)"))

    quot = quotient_group(A, es)
    roots = layer(basis, es).roots
    classes = {quot.residue(A.apply(r)) for r in roots}
    add(Check("quotient bijection on face {e1,e2,e3}",
              quot.invariant_factors == (2, 2, 2) and quot.rank == 0
              and len(roots) == 8 and len(classes) == 8,
              f"group factors {quot.invariant_factors}, {len(roots)} roots, {len(classes)} classes"))
    return report
