"""Standard pairs of a monomial ideal.

A standard pair ``(r, face)`` is an inclusion-maximal translated orthant
``r + N^face`` inside the set of standard monomials, with ``supp(r)`` disjoint
from ``face``. The set of all of them is finite and covers the staircase.

Roots are enumerated in the box ``r_i < D_i`` (``D`` = staircase bounds). For
a fixed root the admissible faces are complements of hitting sets of the
blocking hypergraph ``{i : g_i > r_i}``, so the maximal faces come from
minimal transversals.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .exponents import (
    Exponent,
    InputError,
    MonomialIdeal,
    box_points,
    contains_monomial,
    staircase_bounds,
    support,
)

Face = frozenset


class StandardPair(NamedTuple):
    root: Exponent
    face: frozenset

    def __contains__(self, a) -> bool:
        return in_orthant(a, self.root, self.face)

    def sort_key(self):
        return (tuple(sorted(self.face)), self.root)

    def describe(self, names: Sequence[str]) -> str:
        from .exponents import monomial_str
        face = ",".join(names[i] for i in sorted(self.face))
        return f"({monomial_str(self.root, names)}, {{{face}}})"


def in_orthant(a: Sequence[int], root: Sequence[int], face) -> bool:
    """``a in root + N^face`` (``root`` is zero on ``face``)."""
    return all(x == r for i, (x, r) in enumerate(zip(a, root)) if i not in face)


@dataclass(frozen=True)
class StandardPairBasis:
    ideal: MonomialIdeal
    pairs: tuple[StandardPair, ...]

    def __iter__(self) -> Iterator[StandardPair]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, pair) -> bool:
        root, face = pair
        return StandardPair(tuple(root), frozenset(face)) in set(self.pairs)

    @property
    def faces(self) -> list[frozenset]:
        return sorted({p.face for p in self.pairs}, key=lambda f: (len(f), sorted(f)))


def _check_face(n: int, face) -> frozenset:
    face = frozenset(face)
    if any(not 0 <= i < n for i in face):
        raise InputError(f"face {sorted(face)} outside 0..{n - 1}")
    return face


def admissible(ideal: MonomialIdeal, r: Sequence[int], face) -> bool:
    """``r + N^face`` misses the ideal entirely."""
    face = _check_face(ideal.n, face)
    if len(r) != ideal.n:
        raise InputError("root length does not match the ideal")
    if support(r) & face:
        raise InputError("root support meets the face")
    outside = [i for i in range(ideal.n) if i not in face]
    return not any(all(g[i] <= r[i] for i in outside) for g in ideal.generators)


def is_standard_pair(ideal: MonomialIdeal, r: Sequence[int], face) -> bool:
    face = _check_face(ideal.n, face)
    r = tuple(r)
    if support(r) & face or not admissible(ideal, r, face):
        return False
    for i in range(ideal.n):
        if i in face:
            continue
        shorter = r[:i] + (0,) + r[i + 1:]
        if admissible(ideal, shorter, face | {i}):
            return False
    return True


# -- minimal transversals (Berge's incremental dualization on bitmasks) -------

def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _minimal_masks(masks: Iterable[int]) -> list[int]:
    out: list[int] = []
    for m in sorted(set(masks), key=lambda m: (bin(m).count("1"), m)):
        if not any(k & m == k for k in out):
            out.append(m)
    return out


def minimal_transversals(edges: Iterable[int]) -> list[int]:
    """Minimal hitting sets of a hypergraph given as bitmasks.

    An empty edge makes the hypergraph untransversable and yields ``[]``.
    No edges at all yields ``[0]``.
    """
    edges = _minimal_masks(edges)
    if 0 in edges:
        return []
    trans = [0]
    for e in edges:
        grown = set()
        for t in trans:
            if t & e:
                grown.add(t)
            else:
                grown.update(t | (1 << v) for v in _bits(e))
        trans = _minimal_masks(grown)
    return trans


# -- enumeration ---------------------------------------------------------------

def _standard_points(ideal: MonomialIdeal, top: Sequence[int]) -> Iterator[Exponent]:
    """Standard monomials in the box ``0 <= a <= top``.

    Depth first over coordinates; a partial vector (zeros elsewhere) divides
    every completion, so a partial vector in the ideal prunes the subtree.
    """
    n = ideal.n
    gens = ideal.generators
    cur = [0] * n

    def rec(i):
        if i == n:
            yield tuple(cur)
            return
        for v in range(top[i] + 1):
            cur[i] = v
            if v and any(all(g[j] <= cur[j] for j in range(n)) for g in gens):
                break
            yield from rec(i + 1)
        cur[i] = 0

    if not ideal.is_unit:
        yield from rec(0)


def _maximal_faces(ideal: MonomialIdeal, r: Exponent) -> list[frozenset]:
    n = ideal.n
    supp = 0
    for i in support(r):
        supp |= 1 << i
    edges = []
    for g in ideal.generators:
        block = 0
        for i in range(n):
            if g[i] > r[i]:
                block |= 1 << i
        if not block & supp:
            edges.append(block)
    full = (1 << n) - 1
    return [frozenset(_bits(full & ~(supp | h))) for h in minimal_transversals(edges)]


def compute_standard_pairs(ideal: MonomialIdeal) -> StandardPairBasis:
    """All standard pairs of ``ideal``, in canonical order.

    >>> I = MonomialIdeal(2, ((2, 1),))
    >>> [(p.root, sorted(p.face)) for p in compute_standard_pairs(I)]
    [((0, 0), [0]), ((0, 0), [1]), ((1, 0), [1])]
    """
    if ideal.is_unit:
        raise InputError("the unit ideal has no standard monomials")
    top = [max(d - 1, 0) for d in staircase_bounds(ideal)]
    found = set()
    for r in _standard_points(ideal, top):
        for face in _maximal_faces(ideal, r):
            if is_standard_pair(ideal, r, face):
                found.add(StandardPair(r, face))
    return StandardPairBasis(ideal, tuple(sorted(found, key=StandardPair.sort_key)))


def root_maximal_pairs(basis: StandardPairBasis) -> list[StandardPair]:
    """Pairs whose root is not strictly below another root of the same face."""
    out = []
    for p in basis:
        dominated = any(
            q.face == p.face and q.root != p.root
            and all(a <= b for a, b in zip(p.root, q.root))
            for q in basis
        )
        if not dominated:
            out.append(p)
    return out


# -- layers ----------------------------------------------------------------------

@dataclass(frozen=True)
class Layer:
    """Union of orthants ``r + N^face`` over ``roots``."""

    face: frozenset
    roots: tuple[Exponent, ...]

    def __contains__(self, a) -> bool:
        return any(in_orthant(a, r, self.face) for r in self.roots)

    def __bool__(self) -> bool:
        return bool(self.roots)


def layer(basis: StandardPairBasis, face) -> Layer:
    face = frozenset(face)
    return Layer(face, tuple(sorted(p.root for p in basis if p.face == face)))


def closed_layer(basis: StandardPairBasis, face) -> Layer:
    """Down-closure of ``layer(basis, face)``: every ``r <= r^i`` as a root."""
    base = layer(basis, face)
    roots = set()
    for r in base.roots:
        roots.update(box_points(r))
    return Layer(base.face, tuple(sorted(roots)))


def intersect_pairs(p: StandardPair, q: StandardPair) -> StandardPair | None:
    """Intersection of two orthants, ``None`` when disjoint."""
    (r, l), (s, m) = p, q
    n = len(r)
    root = []
    for i in range(n):
        if i in l and i in m:
            root.append(0)
        elif i in l:
            root.append(s[i])
        elif i in m:
            root.append(r[i])
        elif r[i] != s[i]:
            return None
        else:
            root.append(r[i])
    return StandardPair(tuple(root), frozenset(l & m))


def cover_check(basis: StandardPairBasis, box: Sequence[int]) -> bool:
    """On the box, standard monomials are exactly the points covered by pairs.

    Same answer as :func:`cover_check_scan` without visiting the whole box:
    only standard points are walked, and for each pair the lowest points of
    its orthant lying in the ideal (one per generator) are tested against
    the box.
    """
    ideal = basis.ideal
    box = tuple(box)
    for p in basis:
        r, face = p
        if not all(x <= b for x, b in zip(r, box)):
            continue
        for g in ideal.generators:
            if any(g[i] > r[i] for i in range(ideal.n) if i not in face):
                continue
            low = tuple(max(g[i], r[i]) if i in face else r[i] for i in range(ideal.n))
            if all(x <= b for x, b in zip(low, box)):
                return False
    return all(any(a in p for p in basis) for a in _standard_points(ideal, box))


def cover_check_scan(basis: StandardPairBasis, box: Sequence[int]) -> bool:
    """Point-by-point version of :func:`cover_check`."""
    ideal = basis.ideal
    for a in box_points(box):
        standard = not contains_monomial(ideal, a)
        if standard != any(a in p for p in basis):
            return False
    return True
