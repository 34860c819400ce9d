"""Primary decomposition of monomial ideals from their standard pairs, the
associated primes, and the chain-property audit.

For a face ``l`` occurring in the basis, the component is generated by the
monomials outside the closed layer; its radical is ``(x_i : i not in l)``,
of height ``n - |l|``. Comparing associated primes by inclusion is the same
as comparing faces by reverse inclusion, so "non-minimal prime" becomes
"non-maximal face" and "height one less" becomes "one more element".
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .exponents import InputError, MonomialIdeal, box_points, contains_monomial, lcm, minimalize, unit
from .standard_pairs import StandardPairBasis, closed_layer, layer


@dataclass(frozen=True)
class PrimaryComponent:
    face: frozenset
    ideal: MonomialIdeal

    @property
    def height(self) -> int:
        return self.ideal.n - len(self.face)


@dataclass(frozen=True)
class ChainReport:
    faces: tuple[frozenset, ...]
    violations: tuple[frozenset, ...]

    @property
    def holds(self) -> bool:
        return not self.violations


def component_ideal(basis: StandardPairBasis, face) -> PrimaryComponent:
    """Minimal generators of the complement of the closed layer of ``face``.

    The closed layer is the union of the boxes below the layer roots (free
    along ``face``); the complement of one such box is the irreducible ideal
    ``(x_j^(r_j+1) : j not in face)``, so the component is their intersection.
    """
    face = frozenset(face)
    ideal = basis.ideal
    top = layer(basis, face)
    if not top:
        raise InputError(f"face {sorted(face)} does not occur; its component is the unit ideal")
    n = ideal.n
    irreducible = [ideal.with_generators(tuple((r[j] + 1) * x for x in unit(n, j))
                                          for j in range(n) if j not in face)
                   for r in top.roots]
    return PrimaryComponent(face, intersect_ideals(irreducible))


def component_ideal_scan(basis: StandardPairBasis, face) -> PrimaryComponent:
    """Same result by scanning the box one step above the largest root."""
    face = frozenset(face)
    ideal = basis.ideal
    top = layer(basis, face)
    if not top:
        raise InputError(f"face {sorted(face)} does not occur; its component is the unit ideal")
    closure = closed_layer(basis, face)
    n = ideal.n
    bound = [0 if i in face else max(r[i] for r in top.roots) + 1 for i in range(n)]
    gens = []
    for a in box_points(bound):
        if a in closure:
            continue
        # Minimal iff every single-step divisor is back in the closure.
        if all(a[i] == 0 or a[:i] + (a[i] - 1,) + a[i + 1:] in closure for i in range(n)):
            gens.append(a)
    return PrimaryComponent(face, ideal.with_generators(gens))


def primary_decomposition(basis: StandardPairBasis) -> list[PrimaryComponent]:
    return [component_ideal(basis, face) for face in basis.faces]


def is_primary_monomial(ideal: MonomialIdeal) -> bool:
    """Every variable in a minimal generator also occurs as a pure power."""
    if ideal.is_unit:
        raise InputError("the unit ideal is not proper")
    used = {i for g in ideal.generators for i, x in enumerate(g) if x}
    pure = {next(i for i, x in enumerate(g) if x)
            for g in ideal.generators if sum(1 for x in g if x) == 1}
    return used <= pure


def radical_face(ideal: MonomialIdeal) -> frozenset:
    """Face whose prime is the radical, for a primary monomial ideal."""
    pure = {next(i for i, x in enumerate(g) if x)
            for g in ideal.generators if sum(1 for x in g if x) == 1}
    return frozenset(range(ideal.n)) - pure


def associated_primes(basis: StandardPairBasis) -> list[frozenset]:
    """Faces in the basis; face ``l`` stands for the prime ``(x_i : i not in l)``."""
    return basis.faces


def chain_check(basis: StandardPairBasis) -> ChainReport:
    faces = associated_primes(basis)
    violations = []
    for l in faces:
        if not any(l < m for m in faces):
            continue
        if not any(l < m and len(m) == len(l) + 1 for m in faces):
            violations.append(l)
    return ChainReport(tuple(faces), tuple(violations))


def intersect_ideals(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    """Intersection of monomial ideals: minimalized pairwise lcm's."""
    if not ideals:
        raise InputError("intersection of no ideals")
    gens = ideals[0].generators
    for q in ideals[1:]:
        gens = minimalize([lcm(a, b) for a in gens for b in q.generators], ideals[0].n).generators
    return ideals[0].with_generators(gens)


def _in_box(a, box) -> bool:
    return all(x <= b for x, b in zip(a, box))


def verify_decomposition(ideal: MonomialIdeal, components: Iterable[PrimaryComponent],
                         box: Sequence[int]) -> bool:
    """``a in I`` iff ``a`` lies in every component, for each ``a`` in the box.

    A box point of an ideal lies above a minimal generator that is itself in
    the box, so comparing the in-box generators of both sides is the same as
    scanning every point.
    """
    comps = [c.ideal for c in components]
    if not comps:
        return not any(_in_box(g, box) for g in ideal.generators)
    box = tuple(box)
    for g in ideal.generators:
        if _in_box(g, box) and not all(contains_monomial(q, g) for q in comps):
            return False
    meet = intersect_ideals(comps)
    return all(contains_monomial(ideal, g) for g in meet.generators if _in_box(g, box))


def verify_decomposition_scan(ideal: MonomialIdeal, components: Iterable[PrimaryComponent],
                              box: Sequence[int]) -> bool:
    """Point-by-point version of :func:`verify_decomposition`, for small boxes."""
    comps = [c.ideal for c in components]
    for a in box_points(box):
        if contains_monomial(ideal, a) != all(contains_monomial(q, a) for q in comps):
            return False
    return True


def redundant_components(ideal: MonomialIdeal, components: Sequence[PrimaryComponent],
                         box: Sequence[int]) -> list[frozenset]:
    """Faces whose component can be dropped without changing the
    intersection on the box."""
    out = []
    for i, c in enumerate(components):
        rest = list(components[:i]) + list(components[i + 1:])
        if rest and verify_decomposition(ideal, rest, box):
            out.append(c.face)
    return out
