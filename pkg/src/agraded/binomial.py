"""Pure-difference binomial ideals: the lattice K(I), saturation, the fiber
properties of the staircase, and the primary decomposition
``I = ∩ (I + (x^a : a outside the closed layer of l)``.

Only coefficients +1/-1 are supported. Every "for all a, b in T" condition
is decided on a finite box, which each report echoes back; none of these
results is a proof for points outside the box.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from . import intlinalg as la
from .decomposition import component_ideal
from .exponents import (
    Exponent,
    InputError,
    MonomialIdeal,
    as_exponent,
    box_points,
    contains_monomial,
    default_names,
    sub,
)
from .standard_pairs import StandardPairBasis, closed_layer, compute_standard_pairs, layer
from .toric import Binomial, GroebnerBasis, TermOrder, binomial_groebner, normal_form


class PreconditionError(ValueError):
    """A check that requires saturation / property (ii) was called without it."""


@dataclass(frozen=True)
class BinomialIdeal:
    """Ideal generated by monomials ``x^a`` and binomials ``x^a - x^b``."""

    n: int
    monomial_gens: tuple[Exponent, ...] = ()
    binomial_gens: tuple[tuple[Exponent, Exponent], ...] = ()
    variables: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        mons = tuple(sorted({as_exponent(a, self.n) for a in self.monomial_gens}))
        bins = set()
        for a, b in self.binomial_gens:
            a, b = as_exponent(a, self.n), as_exponent(b, self.n)
            if a == b:
                raise InputError("a binomial needs two distinct terms")
            bins.add((a, b) if a > b else (b, a))
        object.__setattr__(self, "monomial_gens", mons)
        object.__setattr__(self, "binomial_gens", tuple(sorted(bins)))
        names = tuple(self.variables) or default_names(self.n)
        if len(names) != self.n:
            raise InputError(f"{len(names)} variable names for {self.n} variables")
        object.__setattr__(self, "variables", names)

    @classmethod
    def from_monomial(cls, ideal: MonomialIdeal) -> "BinomialIdeal":
        return cls(ideal.n, ideal.generators, (), ideal.variables)

    @property
    def is_monomial(self) -> bool:
        return not self.binomial_gens

    def groebner(self, order: TermOrder | None = None) -> GroebnerBasis:
        gens = [Binomial(a) for a in self.monomial_gens]
        gens += [Binomial(a, b) for a, b in self.binomial_gens]
        return binomial_groebner(self.n, gens, order)

    def default_box(self) -> Exponent:
        """Staircase of the monomial generators joined with every binomial
        exponent, plus 2."""
        top = [0] * self.n
        for a in itertools.chain(self.monomial_gens, *self.binomial_gens):
            top = [max(x, y) for x, y in zip(top, a)]
        return tuple(x + 2 for x in top)


@dataclass(frozen=True)
class Lattice:
    """Subgroup of ``Z^n`` with a Hermite-normal-form basis."""

    n: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def span(cls, n: int, vectors: Iterable[Sequence[int]]) -> "Lattice":
        vecs = [list(v) for v in vectors if any(v)]
        return cls(n, tuple(map(tuple, la.hnf_basis(vecs, n))))

    def __contains__(self, v) -> bool:
        return la.in_lattice(v, self.basis)

    def coset(self, v: Sequence[int]) -> tuple[int, ...]:
        return la.reduce_mod_lattice(v, self.basis)

    @property
    def rank(self) -> int:
        return len(self.basis)


class _Context:
    """Gröbner basis plus the standard monomials of one box."""

    def __init__(self, ideal: BinomialIdeal, box: Sequence[int] | None):
        self.ideal = ideal
        self.box = tuple(box) if box is not None else ideal.default_box()
        if len(self.box) != ideal.n:
            raise InputError("box length does not match the ideal")
        self.G = ideal.groebner()
        self.nf = {a: normal_form(self.G, a) for a in box_points(self.box)}
        self.standard = [a for a, r in self.nf.items() if r is not None]

    def nf_monomial(self, a):
        r = self.nf.get(a) if a in self.nf else normal_form(self.G, a)
        return None if r is None else r.lead


def monomial_part(ideal: BinomialIdeal, box: Sequence[int] | None = None) -> MonomialIdeal:
    """Minimal generators, inside the box, of the monomials contained in ``ideal``."""
    ctx = _Context(ideal, box)
    inside = [a for a, r in ctx.nf.items() if r is None]
    return MonomialIdeal(ideal.n, tuple(inside), ideal.variables)


@dataclass(frozen=True)
class LatticeReport:
    lattice: Lattice
    box: Exponent
    enlarged: bool


def _nf_groups(ctx: _Context) -> dict[Exponent, list[Exponent]]:
    groups: dict[Exponent, list[Exponent]] = defaultdict(list)
    for a in ctx.standard:
        groups[ctx.nf[a].lead].append(a)
    return groups


def lattice_K(ideal: BinomialIdeal, box: Sequence[int] | None = None) -> LatticeReport:
    """Differences ``a - b`` of standard monomials joined by a binomial of ``ideal``.

    Seeded from the reduced Gröbner basis, then audited against every pair of
    standard monomials in the box with equal normal forms; missed differences
    are added and the audit repeated.
    """
    ctx = _Context(ideal, box)
    n = ideal.n
    seeds = []
    for g in ctx.G:
        if g.tail is None:
            continue
        if ctx.nf_monomial(g.lead) is not None and ctx.nf_monomial(g.tail) is not None:
            seeds.append(sub(g.lead, g.tail))
    K = Lattice.span(n, seeds)
    enlarged = False
    for _ in range(n + 1):
        missing = []
        for members in _nf_groups(ctx).values():
            base = members[0]
            missing += [sub(a, base) for a in members[1:] if sub(a, base) not in K]
        if not missing:
            break
        enlarged = True
        K = Lattice.span(n, list(K.basis) + missing)
    return LatticeReport(K, ctx.box, enlarged)


@dataclass
class SaturationReport:
    saturated: bool
    lattice: Lattice
    box: Exponent
    witness: tuple[Exponent, Exponent] | None = None


def is_saturated(ideal: BinomialIdeal, box: Sequence[int] | None = None) -> SaturationReport:
    """Standard monomials in one coset of K must share a normal form.

    The witness ``(a, b)`` is the first failing pair, scanning pairs by total
    degree with ``a`` lexicographically larger.
    """
    ctx = _Context(ideal, box)
    K = lattice_K(ideal, ctx.box).lattice
    pts = sorted(ctx.standard, key=lambda a: (sum(a), a))
    seen: dict[tuple[int, ...], list[Exponent]] = defaultdict(list)
    for b in pts:
        cls = seen[K.coset(b)]
        for a in cls:
            if ctx.nf[a].lead != ctx.nf[b].lead:
                pair = (a, b) if a > b else (b, a)
                return SaturationReport(False, K, ctx.box, pair)
        cls.append(b)
    return SaturationReport(True, K, ctx.box)


# -- staircase + lattice checks -------------------------------------------------------

@dataclass
class FiberReport:
    """Violations of a fiber property found on the box."""

    box: Exponent
    violations: list[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _fibers(standard: Iterable[Exponent], K: Lattice) -> dict[tuple[int, ...], list[Exponent]]:
    out: dict[tuple[int, ...], list[Exponent]] = defaultdict(list)
    for a in sorted(standard):
        out[K.coset(a)].append(a)
    return dict(out)


def _staircase(T: MonomialIdeal, box: Sequence[int]) -> list[Exponent]:
    return [a for a in box_points(box) if not contains_monomial(T, a)]


def property_ii(T: MonomialIdeal, K: Lattice, box: Sequence[int]) -> FiberReport:
    """Each shift ``g + T_q`` lies entirely inside or entirely outside ``T``.

    ``T`` is the staircase of the monomial ideal; fibers are cosets of ``K``.
    Shifts range over ``g`` keeping the fiber in the box.
    """
    box = tuple(box)
    report = FiberReport(box)
    for rep, fiber in _fibers(_staircase(T, box), K).items():
        top = [max(a[i] for a in fiber) for i in range(T.n)]
        for g in box_points([b - t for b, t in zip(box, top)]):
            inside = {not contains_monomial(T, tuple(x + y for x, y in zip(a, g))) for a in fiber}
            if len(inside) == 2:
                report.violations.append((fiber[0], g))
    return report


def property_ii_check(ideal: BinomialIdeal, box: Sequence[int] | None = None) -> FiberReport:
    ctx = _Context(ideal, box)
    T = monomial_part(ideal, ctx.box)
    return property_ii(T, lattice_K(ideal, ctx.box).lattice, ctx.box)


def lemma25(T: MonomialIdeal, K: Lattice, box: Sequence[int], limit: int = 20000) -> FiberReport:
    """Fiber structure of a staircase with properties (i) and (ii).

    (a) ``a + g in T`` iff ``b + h in T`` for ``a, b`` in one fiber and
    ``g, h`` in another; (b) each layer ``T(l)`` and (c) each closed layer
    meets a fiber in nothing or the whole fiber. Part (a) is checked on at
    most ``limit`` quadruples.
    """
    box = tuple(box)
    report = FiberReport(box)
    fibers = list(_fibers(_staircase(T, box), K).values())
    member = lambda a: not contains_monomial(T, a)  # noqa: E731

    checked = 0
    for fp, fq in itertools.product(fibers, repeat=2):
        for a, b in itertools.product(fp, repeat=2):
            for g, h in itertools.product(fq, repeat=2):
                if checked >= limit:
                    break
                checked += 1
                s1 = member(tuple(x + y for x, y in zip(a, g)))
                s2 = member(tuple(x + y for x, y in zip(b, h)))
                if s1 != s2:
                    report.violations.append(("a", a, b, g, h))

    if T.is_unit:
        return report
    basis = compute_standard_pairs(T)
    for face in basis.faces:
        for part, lay in (("b", layer(basis, face)), ("c", closed_layer(basis, face))):
            for fiber in fibers:
                hits = {a in lay for a in fiber}
                if len(hits) == 2:
                    report.violations.append((part, sorted(face), fiber[0]))
    return report


def lemma25_check(ideal: BinomialIdeal, box: Sequence[int] | None = None) -> FiberReport:
    ctx = _Context(ideal, box)
    return lemma25(monomial_part(ideal, ctx.box), lattice_K(ideal, ctx.box).lattice, ctx.box)


# -- decomposition ---------------------------------------------------------------------

def binomial_component(ideal: BinomialIdeal, face, box: Sequence[int] | None = None) -> BinomialIdeal:
    """``I + (x^a : a outside the closed layer of face)``.

    Faces that occur in no standard pair give the unit ideal.
    """
    ctx = _Context(ideal, box)
    T = monomial_part(ideal, ctx.box)
    face = frozenset(face)
    if T.is_unit:
        return BinomialIdeal(ideal.n, ((0,) * ideal.n,), (), ideal.variables)
    basis = compute_standard_pairs(T)
    if face not in set(basis.faces):
        return BinomialIdeal(ideal.n, ((0,) * ideal.n,), (), ideal.variables)
    extra = component_ideal(basis, face).ideal.generators
    mons = MonomialIdeal(ideal.n, ideal.monomial_gens + extra).generators
    return BinomialIdeal(ideal.n, mons, ideal.binomial_gens, ideal.variables)


@dataclass
class DecompositionReport:
    box: Exponent
    components: dict[frozenset, BinomialIdeal]
    holds: bool
    failures: list[tuple[int, ...]] = field(default_factory=list)


def _relation_rows(points: Sequence[Exponent], nf: Callable) -> list[list[int]]:
    """Rows spanning the annihilator of ``ker(NF)`` on ``span(points)``.

    NF sends each monomial to a monomial or zero, so ``sum c_a x^a`` reduces to
    0 iff the coefficients vanish on every zero-class point and sum to zero on
    each group sharing a normal form.
    """
    groups: dict = defaultdict(list)
    for i, a in enumerate(points):
        groups[nf(a)].append(i)
    rows = []
    for target, idx in groups.items():
        if target is None:
            rows += [[int(j == i) for j in range(len(points))] for i in idx]
        else:
            rows.append([int(j in idx) for j in range(len(points))])
    return rows


def verify_primary_decomposition(ideal: BinomialIdeal, box: Sequence[int] | None = None,
                                 require_saturated: bool = True) -> DecompositionReport:
    """Compare ``I`` with the intersection of its components slice by slice.

    On each coset of K inside the box, the polynomials of ``I`` and of each
    component are kernels of normal-form maps; ``I`` equals the
    intersection iff the components' relation rows span the same space as the
    relation rows of ``I``.
    """
    ctx = _Context(ideal, box)
    if require_saturated:
        sat = is_saturated(ideal, ctx.box)
        if not sat.saturated:
            raise PreconditionError(f"ideal is not saturated on the box: witness {sat.witness}")
        prop = property_ii_check(ideal, ctx.box)
        if not prop.ok:
            raise PreconditionError(f"property (ii) fails: {prop.violations[0]}")
    K = lattice_K(ideal, ctx.box).lattice
    T = monomial_part(ideal, ctx.box)
    faces = compute_standard_pairs(T).faces if not T.is_unit else []
    comps = {face: binomial_component(ideal, face, ctx.box) for face in faces}
    comp_gb = {face: c.groebner() for face, c in comps.items()}

    def nf_in(G):
        return lambda a: (lambda r: None if r is None else r.lead)(normal_form(G, a))

    base_nf = nf_in(ctx.G)
    report = DecompositionReport(ctx.box, comps, True)
    slices: dict[tuple[int, ...], list[Exponent]] = defaultdict(list)
    for a in box_points(ctx.box):
        slices[K.coset(a)].append(a)
    for rep, pts in sorted(slices.items()):
        own = _relation_rows(pts, base_nf)
        parts = [row for G in comp_gb.values() for row in _relation_rows(pts, nf_in(G))]
        r_parts = la.frac_rank(parts) if parts else 0
        if la.frac_rank(own) != r_parts or la.frac_rank(own + parts) != r_parts:
            report.holds = False
            report.failures.append(pts[0])
    return report


def is_primary_bounded(component: BinomialIdeal, box: Sequence[int]) -> tuple[bool, tuple | None]:
    """Monomial test for primary-ness on a box.

    For ``x^a`` outside the component and ``x^b`` with ``x^(a+b)`` inside,
    some power ``x^(N b)`` must be inside, ``N`` up to the box's total
    degree + 1. Returns the first failing ``(a, b)``.
    """
    G = component.groebner()
    pts = list(box_points(box))
    outside = [a for a in pts if normal_form(G, a) is not None]
    cap = sum(box) + 1
    for a in outside:
        for b in pts:
            if not any(b):
                continue
            if normal_form(G, tuple(x + y for x, y in zip(a, b))) is not None:
                continue
            if not any(normal_form(G, tuple(N * x for x in b)) is None for N in range(1, cap + 1)):
                return False, (a, b)
    return True, None


def staircase_basis(ideal: BinomialIdeal, box: Sequence[int] | None = None) -> StandardPairBasis:
    """Standard pairs of the monomials-in-``ideal`` staircase (box-bounded)."""
    return compute_standard_pairs(monomial_part(ideal, box))
