"""Slow, obviously-correct reference computations used by the tests.

The brute-force references share nothing with the package beyond the basic
exponent helpers and the monomial ideal container; the random generators at
the end build inputs only.
"""
from __future__ import annotations

import itertools
import random
from functools import lru_cache

from agraded import intlinalg as la
from agraded.exponents import MonomialIdeal, box_points, contains_monomial, staircase_bounds
from agraded.grading import GradingMap, is_pointed
from agraded.toric import TermOrder


def random_monomial_ideal(rng: random.Random, max_n=5, max_exp=4, max_gens=6) -> MonomialIdeal:
    """A proper, nonzero-or-zero random monomial ideal."""
    n = rng.randint(1, max_n)
    while True:
        k = rng.randint(0, max_gens)
        gens = [tuple(rng.randint(0, max_exp) for _ in range(n)) for _ in range(k)]
        gens = [g for g in gens if any(g)]
        ideal = MonomialIdeal(n, tuple(gens))
        if not ideal.is_unit:
            return ideal


def random_corpus(seed: int, size: int, **kw) -> list[MonomialIdeal]:
    rng = random.Random(seed)
    return [random_monomial_ideal(rng, **kw) for _ in range(size)]


def _orthant_hits_ideal(ideal: MonomialIdeal, r, face, D) -> bool:
    """Scan ``r + t`` for ``t`` supported on face with ``t <= D``; enough since
    membership only depends on ``min(a, D)``."""
    face = sorted(face)
    ranges = [range(D[i] + 1) for i in face]
    for t in itertools.product(*ranges):
        a = list(r)
        for i, x in zip(face, t):
            a[i] += x
        if contains_monomial(ideal, a):
            return True
    return False


def brute_standard_pairs(ideal: MonomialIdeal) -> set[tuple[tuple[int, ...], frozenset]]:
    """Inclusion-maximal admissible ``(r, l)``, compared against every
    admissible superset rather than single steps."""
    n = ideal.n
    D = staircase_bounds(ideal)

    @lru_cache(maxsize=None)
    def adm(r, face):
        return not _orthant_hits_ideal(ideal, r, face, D)

    out = set()
    for r in box_points(D):
        zeros = [i for i in range(n) if r[i] == 0]
        for k in range(len(zeros) + 1):
            for face in itertools.combinations(zeros, k):
                face = frozenset(face)
                if not adm(r, face):
                    continue
                # (r, l) inside (s, m) forces l <= m, s = r off m and s = 0 on m.
                bigger = False
                rest = [i for i in range(n) if i not in face]
                for j in range(1, len(rest) + 1):
                    for extra in itertools.combinations(rest, j):
                        m = face | frozenset(extra)
                        s = tuple(0 if i in m else r[i] for i in range(n))
                        if adm(s, m):
                            bigger = True
                            break
                    if bigger:
                        break
                if not bigger:
                    out.add((r, face))
    return out


def colon(ideal: MonomialIdeal, m) -> MonomialIdeal:
    return ideal.with_generators(tuple(max(g - x, 0) for g, x in zip(gen, m))
                                 for gen in ideal.generators)


def brute_associated_faces(ideal: MonomialIdeal) -> set[frozenset]:
    """``P`` is associated iff ``(I : x^m) = P`` for a monomial ``x^m`` not in I.

    Monomial primes are generated by variables; report the complementary face.
    """
    out = set()
    for m in box_points(staircase_bounds(ideal)):
        if contains_monomial(ideal, m):
            continue
        q = colon(ideal, m)
        if all(sum(g) == 1 for g in q.generators):
            used = {g.index(1) for g in q.generators}
            out.add(frozenset(range(ideal.n)) - used)
    return out


def orthant_points(root, face, box):
    return {a for a in box_points(box)
            if all(a[i] >= root[i] if i in face else a[i] == root[i] for i in range(len(box)))}


def naive_fiber(columns, q, cap):
    """All ``a`` with ``a_i <= cap`` and ``sum a_i col_i = q``."""
    n = len(columns)
    out = []
    for a in itertools.product(range(cap + 1), repeat=n):
        img = tuple(sum(a[i] * columns[i][j] for i in range(n)) for j in range(len(q)))
        if img == tuple(q):
            out.append(a)
    return sorted(out)


def naive_agraded_count(weights, bound) -> int:
    """Number of down-closed choices of one monomial per degree ``0..bound``
    for the 1-row map ``weights``, by trying every combination."""
    n = len(weights)
    fibers = {}
    for a in itertools.product(*(range(bound // w + 1) for w in weights)):
        deg = sum(x * w for x, w in zip(a, weights))
        if deg <= bound:
            fibers.setdefault(deg, []).append(a)
    degrees = sorted(fibers)
    count = 0
    for choice in itertools.product(*(fibers[d] for d in degrees)):
        chosen = set(choice)
        ok = all(tuple(x - (j == i) for j, x in enumerate(a)) in chosen
                 for a in chosen for i in range(n) if a[i])
        count += ok
    return count


def box_scan_decomposition(ideal: MonomialIdeal, comps, box) -> bool:
    return all(contains_monomial(ideal, a) == all(contains_monomial(q, a) for q in comps)
               for a in box_points(box))


def random_pointed_map(rng: random.Random, d_choices=(1, 2), max_n=6):
    """Random pointed grading map whose columns span ``Q^d``."""
    while True:
        d = rng.choice(d_choices)
        n = rng.randint(d, max_n)
        if d == 1:
            cols = [(rng.randint(1, 4),) for _ in range(n)]
        else:
            cols = [(rng.randint(-1, 3), rng.randint(-1, 3)) for _ in range(n)]
        if any(not any(c) for c in cols):
            continue
        A = GradingMap.from_columns(cols)
        if la.rank([list(c) for c in cols]) == d and is_pointed(A).pointed:
            return A


def random_order(rng: random.Random, n: int):
    weight = tuple(rng.randint(1, 1000) for _ in range(n))
    tiebreak = list(range(n))
    rng.shuffle(tiebreak)
    return TermOrder(weight, tuple(tiebreak))


def degree_box(A, cert, top: int):
    """Degree ranges covering every monomial with ``cert``-value up to ``top``."""
    lo = [0] * A.d
    hi = [0] * A.d
    wmin = min(sum(c * x for c, x in zip(cert, col)) for col in A.columns)
    steps = top // wmin
    for col in A.columns:
        for j, x in enumerate(col):
            lo[j] = min(lo[j], x * steps)
            hi[j] = max(hi[j], x * steps)
    return tuple(zip(lo, hi))
