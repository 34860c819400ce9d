"""Gröbner bases of pure-difference binomial ideals and toric ideals.

Every element is ``x^lead - x^tail`` or a bare monomial ``x^lead``
(``tail is None``). S-pairs and reductions keep that shape: a binomial
reduced by a monomial becomes a monomial, never a sum, so coefficients stay
in ``{1, -1}`` and are not stored.
"""
from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, NamedTuple, Sequence

from . import intlinalg as la
from .exponents import Exponent, InputError, MonomialIdeal, divides, lcm
from .grading import GradingMap, _require_pointed

Key = Callable[[Sequence[int]], tuple]


class Binomial(NamedTuple):
    """``x^lead - x^tail``; a monomial when ``tail`` is None."""

    lead: Exponent
    tail: Exponent | None = None

    @property
    def is_monomial(self) -> bool:
        return self.tail is None


@dataclass(frozen=True)
class TermOrder:
    """Compare ``weight . a`` first, then exponents lexicographically in
    ``tiebreak`` order (first listed variable most significant)."""

    weight: tuple[int, ...]
    tiebreak: tuple[int, ...]

    def __post_init__(self):
        if any(w < 0 for w in self.weight):
            raise InputError("term order weights must be non-negative")
        if sorted(self.tiebreak) != list(range(len(self.weight))):
            raise InputError("tiebreak must be a permutation of the variables")

    @classmethod
    def default(cls, n: int) -> "TermOrder":
        return cls((1,) * n, tuple(range(n)))

    def key(self, a: Sequence[int]) -> tuple:
        return (sum(w * x for w, x in zip(self.weight, a)), tuple(a[i] for i in self.tiebreak))


@dataclass(frozen=True)
class GroebnerBasis:
    n: int
    elements: tuple[Binomial, ...]
    order: TermOrder
    reduced: bool = True

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def orient(a: Sequence[int], b: Sequence[int] | None, key: Key) -> Binomial | None:
    """Binomial ``x^a - x^b`` with the larger term first; None if it is 0."""
    a = tuple(a)
    if b is None:
        return Binomial(a)
    b = tuple(b)
    if a == b:
        return None
    return Binomial(a, b) if key(a) > key(b) else Binomial(b, a)


def reduce_monomial(a: Sequence[int], elements: Sequence[Binomial]) -> Exponent | None:
    """Normal form of ``x^a``: a single monomial, or None when it reduces to 0."""
    a = tuple(a)
    while True:
        for g in elements:
            if divides(g.lead, a):
                if g.tail is None:
                    return None
                a = tuple(x - l + t for x, l, t in zip(a, g.lead, g.tail))
                break
        else:
            return a


def _nf(a, b, elements, key) -> Binomial | None:
    na = reduce_monomial(a, elements)
    nb = reduce_monomial(b, elements) if b is not None else None
    if na is None and nb is None:
        return None
    if na is None:
        return Binomial(nb)
    if nb is None:
        return Binomial(na)
    return orient(na, nb, key)


def normal_form(G: GroebnerBasis, element) -> Binomial | None:
    """Remainder of a monomial (exponent tuple) or a :class:`Binomial`.

    Returns None for zero, so ``normal_form(G, f) is None`` is ideal membership.
    """
    if isinstance(element, Binomial):
        a, b = element
    else:
        a, b = tuple(element), None
    return _nf(a, b, G.elements, G.order.key)


def _spoly(f: Binomial, g: Binomial) -> tuple[Exponent, Exponent | None] | None:
    m = lcm(f.lead, g.lead)
    tf = None if f.tail is None else tuple(x - l + t for x, l, t in zip(m, f.lead, f.tail))
    tg = None if g.tail is None else tuple(x - l + t for x, l, t in zip(m, g.lead, g.tail))
    if tf is None and tg is None:
        return None
    if tf is None:
        return tg, None
    if tg is None:
        return tf, None
    return tf, tg


def _coprime(a, b) -> bool:
    return not any(x and y for x, y in zip(a, b))


def _interreduce(elements: list[Binomial], key: Key) -> list[Binomial]:
    elements = sorted(set(elements), key=lambda g: key(g.lead))
    minimal: list[Binomial] = []
    for g in elements:
        if not any(divides(h.lead, g.lead) for h in minimal):
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        tail = reduce_monomial(g.tail, others) if g.tail is not None else None
        out.append(Binomial(g.lead, tail))
    return sorted(out, key=lambda g: key(g.lead), reverse=True)


def buchberger(gens: Iterable[Binomial], key: Key) -> list[Binomial]:
    """Reduced Gröbner basis of the ideal generated by ``gens`` under ``key``.

    Pairs are treated smallest lcm first; the coprime-lead criterion and
    Buchberger's chain criterion discard pairs that must reduce to zero.
    """
    basis: list[Binomial] = []
    active: list[bool] = []
    done: set[tuple[int, int]] = set()
    heap: list = []
    tick = itertools.count()

    def add(g: Binomial):
        k = len(basis)
        for i in range(k):
            if active[i]:
                m = lcm(basis[i].lead, g.lead)
                heapq.heappush(heap, (key(m), next(tick), i, k))
        # Elements whose lead ``g`` divides stop reducing and pairing, but
        # their queued pairs (including the one with ``g``) stay.
        for i in range(k):
            if active[i] and divides(g.lead, basis[i].lead):
                active[i] = False
        basis.append(g)
        active.append(True)

    def chain(i, j, m) -> bool:
        for k, h in enumerate(basis):
            if k in (i, j) or not divides(h.lead, m):
                continue
            if (min(i, k), max(i, k)) in done and (min(j, k), max(j, k)) in done:
                return True
        return False

    reducers = lambda: [g for g, a in zip(basis, active) if a]  # noqa: E731
    for g in gens:
        r = _nf(g.lead, g.tail, reducers(), key)
        if r is not None:
            add(r)
    while heap:
        _, _, i, j = heapq.heappop(heap)
        f, g = basis[i], basis[j]
        m = lcm(f.lead, g.lead)
        if _coprime(f.lead, g.lead) or chain(i, j, m):
            done.add((i, j))
            continue
        done.add((i, j))
        s = _spoly(f, g)
        if s is None:
            continue
        r = _nf(s[0], s[1], reducers(), key)
        if r is not None:
            add(r)
    return _interreduce(basis, key)


def binomial_groebner(n: int, gens: Iterable[Binomial], order: TermOrder | None = None) -> GroebnerBasis:
    order = order or TermOrder.default(n)
    oriented = []
    for g in gens:
        b = orient(g.lead, g.tail, order.key)
        if b is not None:
            oriented.append(b)
    return GroebnerBasis(n, tuple(buchberger(oriented, order.key)), order, True)


def kernel_basis(A: GradingMap) -> list[tuple[int, ...]]:
    """Integer basis of ``ker A`` (Hermite normal form, so canonical)."""
    return [tuple(v) for v in la.kernel_basis(A.rows, A.n)]


def _split(v: Sequence[int]) -> tuple[Exponent, Exponent]:
    return tuple(max(x, 0) for x in v), tuple(max(-x, 0) for x in v)


def _saturate_by(elements: list[Binomial], i: int, weight: Sequence[int],
                 tiebreak: Sequence[int]) -> list[Binomial]:
    """Generators of ``I : x_i^inf`` for an ideal homogeneous for ``weight``.

    Under an order that makes ``x_i`` cheapest inside each degree, a basis
    element whose lead is divisible by ``x_i`` is divisible by ``x_i``
    altogether, so dividing out ``x_i`` from every element saturates.
    """
    def key(a):
        return (sum(w * x for w, x in zip(weight, a)), -a[i], tuple(a[j] for j in tiebreak))

    out = []
    for g in buchberger(elements, key):
        if g.tail is None:
            out.append(Binomial(g.lead[:i] + (0,) + g.lead[i + 1:]))
        else:
            p = min(g.lead[i], g.tail[i])
            lead = g.lead[:i] + (g.lead[i] - p,) + g.lead[i + 1:]
            tail = g.tail[:i] + (g.tail[i] - p,) + g.tail[i + 1:]
            out.append(orient(lead, tail, key))
    return out


def toric_groebner(A: GradingMap, order: TermOrder | None = None) -> GroebnerBasis:
    """Reduced Gröbner basis of the toric ideal of ``A``."""
    cert = _require_pointed(A)
    n = A.n
    order = order or TermOrder.default(n)
    if len(order.weight) != n:
        raise InputError("term order and grading map disagree on the number of variables")
    weight = [sum(c * x for c, x in zip(cert, col)) for col in A.columns]
    elements = []
    for v in kernel_basis(A):
        plus, minus = _split(v)
        elements.append(Binomial(plus, minus))
    for i in range(n):
        elements = _saturate_by(elements, i, weight, order.tiebreak)
    return binomial_groebner(n, elements, order)


def initial_ideal(G: GroebnerBasis, variables: Sequence[str] = ()) -> MonomialIdeal:
    if not G.elements:
        return MonomialIdeal(G.n, (), tuple(variables))
    return MonomialIdeal(G.n, tuple(g.lead for g in G), tuple(variables))


def spoly_closed(G: GroebnerBasis) -> bool:
    """Every S-pair of the basis reduces to zero."""
    key = G.order.key
    for f, g in itertools.combinations(G.elements, 2):
        s = _spoly(f, g)
        if s is not None and _nf(s[0], s[1], G.elements, key) is not None:
            return False
    return True
