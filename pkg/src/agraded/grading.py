"""The grading map A: pointedness, fibers, bounded A-gradedness checks,
quotient groups A(Z^n)/A(Z^face) and the triangulation read off a basis.

All checks that quantify over infinitely many degrees are run on a finite
box and say so in their reports.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from . import intlinalg as la
from .exponents import Exponent, InputError, MonomialIdeal, contains_monomial
from .standard_pairs import StandardPairBasis


@dataclass(frozen=True)
class GradingMap:
    """Integer map ``Z^n -> Z^d`` stored by its column images."""

    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cols = tuple(tuple(int(x) for x in c) for c in self.columns)
        if not cols:
            raise InputError("grading map needs at least one column")
        if len({len(c) for c in cols}) != 1 or not cols[0]:
            raise InputError("columns of a grading map must share a positive length")
        object.__setattr__(self, "columns", cols)

    @classmethod
    def from_columns(cls, columns) -> "GradingMap":
        return cls(tuple(tuple(c) for c in columns))

    @classmethod
    def from_rows(cls, rows) -> "GradingMap":
        rows = [list(r) for r in rows]
        if not rows or len({len(r) for r in rows}) != 1:
            raise InputError("rows of a grading map must share a length")
        return cls(tuple(zip(*rows)))

    @property
    def d(self) -> int:
        return len(self.columns[0])

    @property
    def n(self) -> int:
        return len(self.columns)

    @property
    def rows(self) -> list[list[int]]:
        return la.transpose(self.columns)

    def apply(self, a: Sequence[int]) -> tuple[int, ...]:
        if len(a) != self.n:
            raise InputError(f"vector of length {len(a)} for a map on Z^{self.n}")
        out = [0] * self.d
        for x, col in zip(a, self.columns):
            if x:
                for i, c in enumerate(col):
                    out[i] += x * c
        return tuple(out)


@dataclass(frozen=True)
class Pointedness:
    """Either a positive functional on the columns or a kernel witness."""

    pointed: bool
    vector: tuple[int, ...]

    def validate(self, A: GradingMap) -> bool:
        if self.pointed:
            return len(self.vector) == A.d and all(
                sum(c * x for c, x in zip(self.vector, col)) > 0 for col in A.columns)
        w = self.vector
        return (len(w) == A.n and all(x >= 0 for x in w) and any(w)
                and not any(A.apply(w)))


def is_pointed(A: GradingMap) -> Pointedness:
    """Decide ``ker A`` meets the non-negative orthant only in 0.

    Solves ``c . col >= 1`` for every column by Fourier-Motzkin; infeasibility
    comes with non-negative multipliers that combine the columns to zero.
    """
    feasible, vec = la.fourier_motzkin([list(col) for col in A.columns], [1] * A.n)
    return Pointedness(feasible, la.primitive(vec))


def _require_pointed(A: GradingMap) -> tuple[int, ...]:
    cert = is_pointed(A)
    if not cert.pointed:
        raise InputError(f"grading map is not pointed: kernel witness {cert.vector}")
    return cert.vector


class _FiberSearch:
    """Depth-first fiber enumeration for a fixed pointed map.

    Variables are visited by decreasing certificate weight; the certificate
    value of the remaining degree bounds each exponent. A memo of which
    (depth, remainder) states admit any completion prunes dead branches and
    is shared across degrees.
    """

    def __init__(self, A: GradingMap, cert: Sequence[int]):
        self.A = A
        self.cert = tuple(cert)
        self.weight = [_dot(cert, col) for col in A.columns]
        self.order = sorted(range(A.n), key=lambda j: (-self.weight[j], j))
        self._memo: dict[tuple[int, tuple[int, ...]], bool] = {}

    def completable(self, idx: int, rem: tuple[int, ...]) -> bool:
        key = (idx, rem)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if idx == self.A.n:
            ok = not any(rem)
        else:
            j = self.order[idx]
            col = self.A.columns[j]
            budget = _dot(self.cert, rem)
            ok = False
            if budget >= 0:
                for t in range(budget // self.weight[j] + 1):
                    nxt = tuple(r - t * c for r, c in zip(rem, col))
                    if self.completable(idx + 1, nxt):
                        ok = True
                        break
        self._memo[key] = ok
        return ok

    def search(self, q: Sequence[int],
               prune: Callable[[Sequence[int]], bool] | None = None) -> Iterator[Exponent]:
        """Points of the fiber over ``q``; ``prune(partial)`` must be
        monotone (true stays true when an exponent grows)."""
        A = self.A
        q = tuple(q)
        if len(q) != A.d:
            raise InputError(f"degree of length {len(q)} for a map into Z^{A.d}")
        cur = [0] * A.n

        def rec(idx, rem):
            if not self.completable(idx, rem):
                return
            if idx == A.n:
                yield tuple(cur)
                return
            j = self.order[idx]
            col = A.columns[j]
            for t in range(_dot(self.cert, rem) // self.weight[j] + 1):
                cur[j] = t
                if t and prune is not None and prune(cur):
                    break
                yield from rec(idx + 1, tuple(r - t * c for r, c in zip(rem, col)))
            cur[j] = 0

        yield from rec(0, q)


def fiber_enumerate(A: GradingMap, q: Sequence[int]) -> list[Exponent]:
    """All ``a >= 0`` with ``A a = q``, sorted."""
    return sorted(_FiberSearch(A, _require_pointed(A)).search(q))


@dataclass
class AGradedReport:
    """Outcome of a bounded Hilbert-function check.

    Certified only for degrees inside ``box``.
    """

    box: tuple[tuple[int, int], ...]
    degrees_checked: int = 0
    offending: dict[tuple[int, ...], int] = field(default_factory=dict)
    standard: dict[tuple[int, ...], Exponent] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.offending


def _normalize_box(box, d: int) -> tuple[tuple[int, int], ...]:
    """Accept ``(hi, ...)`` or ``((lo, hi), ...)``."""
    box = list(box)
    if len(box) != d:
        raise InputError(f"box has {len(box)} coordinates, expected {d}")
    out = []
    for b in box:
        lo, hi = (0, b) if isinstance(b, int) else b
        out.append((int(lo), int(hi)))
    return tuple(out)


def agraded_verify(ideal: MonomialIdeal, A: GradingMap, box) -> AGradedReport:
    """Check that every degree in the box has 1 standard monomial when its
    fiber is nonempty and 0 otherwise.
    """
    if ideal.n != A.n:
        raise InputError("ideal and grading map disagree on the number of variables")
    fibers = _FiberSearch(A, _require_pointed(A))
    bounds = _normalize_box(box, A.d)
    report = AGradedReport(bounds)
    in_ideal = lambda a: contains_monomial(ideal, a)  # noqa: E731
    for q in itertools.product(*(range(lo, hi + 1) for lo, hi in bounds)):
        report.degrees_checked += 1
        found = list(fibers.search(q, prune=in_ideal))
        if len(found) == 1:
            report.standard[q] = found[0]
        elif found or fibers.completable(0, q):
            report.offending[q] = len(found)
    return report


# -- quotient groups -------------------------------------------------------------

@dataclass(frozen=True)
class QuotientGroup:
    """``A(Z^n) / A(Z^face)`` with a canonical residue map.

    Residues list torsion coordinates reduced mod the invariant factors, then
    the free coordinates unreduced.
    """

    invariant_factors: tuple[int, ...]
    rank: int
    lattice: tuple[tuple[int, ...], ...]
    change: tuple[tuple[int, ...], ...]
    diagonal: tuple[int, ...]

    @property
    def order(self) -> int | None:
        if self.rank:
            return None
        out = 1
        for x in self.invariant_factors:
            out *= x
        return out

    def residue(self, q: Sequence[int]) -> tuple[int, ...]:
        if self.lattice and len(q) != len(self.lattice[0]):
            raise InputError(f"degree {tuple(q)} has the wrong length")
        y = la.solve_in_lattice(q, self.lattice)
        if y is None:
            raise InputError(f"degree {tuple(q)} is not in the column lattice")
        z = [sum(y[i] * self.change[i][j] for i in range(len(y))) for j in range(len(y))]
        torsion, free = [], []
        for j, zj in enumerate(z):
            dj = self.diagonal[j] if j < len(self.diagonal) else 0
            if dj == 0:
                free.append(zj)
            elif dj > 1:
                torsion.append(zj % dj)
        return tuple(torsion + free)

    def elements(self) -> list[tuple[int, ...]]:
        if self.rank:
            raise ValueError("infinite group")
        return list(itertools.product(*(range(x) for x in self.invariant_factors)))


def quotient_group(A: GradingMap, face) -> QuotientGroup:
    face = sorted(face)
    if any(not 0 <= i < A.n for i in face):
        raise InputError(f"face {face} outside 0..{A.n - 1}")
    lattice = la.hnf_basis([list(c) for c in A.columns], A.d)
    r = len(lattice)
    sub = [la.solve_in_lattice(A.columns[i], lattice) for i in face]
    if not sub:
        return QuotientGroup((), r, tuple(map(tuple, lattice)),
                             tuple(map(tuple, la.identity(r))), ())
    _, diag_m, v = la.smith(sub)
    diag = tuple(diag_m[i][i] for i in range(min(len(sub), r)))
    factors = tuple(x for x in diag if x > 1)
    rank = r - sum(1 for x in diag if x)
    return QuotientGroup(factors, rank, tuple(map(tuple, lattice)),
                         tuple(map(tuple, v)), diag)


# -- triangulation -----------------------------------------------------------------

@dataclass(frozen=True)
class Cone:
    """Simplicial cone ``A(R>=0^face)``.

    ``facet_normals[i]`` vanishes on every ray except ``rays[i]`` and is
    positive there; normals live in the real span of the columns.
    """

    face: frozenset
    rays: tuple[tuple[int, ...], ...]
    facet_normals: tuple[tuple[int, ...], ...]


@dataclass
class TriangulationReport:
    cells: list[Cone]
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def _facet_normals(rays, span) -> tuple[tuple[int, ...], ...] | None:
    # Normal h = alpha @ span with h . ray_j = delta_ij.
    g = [[_dot(b, ray) for ray in rays] for b in span]  # r x r
    gt = la.transpose(g)
    normals = []
    for i in range(len(rays)):
        alpha = la.solve_rational(gt, [int(i == j) for j in range(len(rays))])
        if alpha is None:
            return None
        h = [sum(alpha[k] * span[k][c] for k in range(len(span))) for c in range(len(span[0]))]
        normals.append(la.primitive(h))
    return tuple(normals)


def _properly_meet(A: GradingMap, l: frozenset, m: frozenset) -> bool:
    """Separating functional ``h``: ``h >= 1`` on rays only in ``l``,
    ``h <= -1`` on rays only in ``m``, ``h == 0`` on shared rays."""
    rows, rhs = [], []
    for i in l - m:
        rows.append(list(A.columns[i]))
        rhs.append(1)
    for i in m - l:
        rows.append([-x for x in A.columns[i]])
        rhs.append(1)
    for i in l & m:
        rows.append(list(A.columns[i]))
        rows.append([-x for x in A.columns[i]])
        rhs += [0, 0]
    ok, _ = la.fourier_motzkin(rows, rhs)
    return ok


def triangulation(basis: StandardPairBasis, A: GradingMap) -> TriangulationReport:
    """Cells ``A(R>=0^face)`` for every ``(0, face)`` in the basis, with a
    validity audit (simplicial, full-dimensional, proper pairwise
    intersections, every interior facet shared by exactly two cells).
    """
    ideal = basis.ideal
    if ideal.n != A.n:
        raise InputError("basis and grading map disagree on the number of variables")
    zero = (0,) * A.n
    faces = sorted({p.face for p in basis if p.root == zero}, key=lambda f: sorted(f))
    span = la.hnf_basis([list(c) for c in A.columns], A.d)
    dim = len(span)
    cells: list[Cone] = []
    violations: list[str] = []
    for face in faces:
        rays = tuple(A.columns[i] for i in sorted(face))
        if la.rank([list(r) for r in rays]) != len(rays):
            violations.append(f"cell {sorted(face)} is not simplicial")
            cells.append(Cone(face, rays, ()))
            continue
        if len(rays) != dim:
            violations.append(f"cell {sorted(face)} has dimension {len(rays)}, expected {dim}")
            cells.append(Cone(face, rays, ()))
            continue
        cells.append(Cone(face, rays, _facet_normals(rays, span)))

    for c1, c2 in itertools.combinations(cells, 2):
        if not _properly_meet(A, c1.face, c2.face):
            violations.append(f"cells {sorted(c1.face)} and {sorted(c2.face)} overlap improperly")

    for cell in cells:
        if not cell.facet_normals:
            continue
        for i, idx in enumerate(sorted(cell.face)):
            facet = cell.face - {idx}
            sharing = sum(1 for c in cells if facet <= c.face)
            if sharing == 2:
                continue
            h = cell.facet_normals[i]
            on_boundary = all(_dot(h, col) >= 0 for col in A.columns)
            if sharing == 1 and on_boundary:
                continue
            violations.append(
                f"facet {sorted(facet)} of cell {sorted(cell.face)} lies in {sharing} cell(s)"
                + ("" if on_boundary else " and is interior"))
    return TriangulationReport(cells, sorted(set(violations)))


# -- bounded enumeration of A-graded staircases -----------------------------------

@dataclass(frozen=True)
class AGradedCandidate:
    """One standard monomial per degree of certificate value ``<= bound``,
    closed under division. Only certified up to the bound.
    """

    bound: int
    standard: tuple[Exponent, ...]
    ideal: MonomialIdeal


def truncated_fibers(A: GradingMap, bound: int) -> tuple[tuple[int, ...], dict]:
    """Certificate and the fibers of all degrees with ``cert . q <= bound``."""
    cert = _require_pointed(A)
    weight = [_dot(cert, col) for col in A.columns]
    fibers: dict[tuple[int, ...], list[Exponent]] = {}
    cur = [0] * A.n

    def rec(j, budget):
        if j == A.n:
            a = tuple(cur)
            fibers.setdefault(A.apply(a), []).append(a)
            return
        for t in range(budget // weight[j] + 1):
            cur[j] = t
            rec(j + 1, budget - t * weight[j])
        cur[j] = 0

    rec(0, bound)
    return cert, {q: sorted(v) for q, v in fibers.items()}


def enumerate_agraded(A: GradingMap, bound: int) -> list[AGradedCandidate]:
    """All down-closed choices of one monomial per degree up to ``bound``."""
    cert, fibers = truncated_fibers(A, bound)
    degrees = sorted(fibers, key=lambda q: (_dot(cert, q), q))
    all_monomials = [a for q in degrees for a in fibers[q]]
    chosen: dict[tuple[int, ...], Exponent] = {}
    out: list[AGradedCandidate] = []

    def closed(a):
        for i, x in enumerate(a):
            if x:
                below = tuple(v - (j == i) for j, v in enumerate(a))
                if chosen[A.apply(below)] != below:
                    return False
        return True

    def rec(k):
        if k == len(degrees):
            std = set(chosen.values())
            gens = [a for a in all_monomials if a not in std]
            ideal = MonomialIdeal(A.n, tuple(gens)) if gens else MonomialIdeal(A.n)
            out.append(AGradedCandidate(bound, tuple(sorted(std)), ideal))
            return
        q = degrees[k]
        for a in fibers[q]:
            if closed(a):
                chosen[q] = a
                rec(k + 1)
                del chosen[q]

    rec(0)
    return out
