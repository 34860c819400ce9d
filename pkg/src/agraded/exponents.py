"""Exponent vectors and monomial ideals.

Exponent vectors are plain tuples of non-negative ints. A :class:`MonomialIdeal`
keeps a minimal generating set, so membership of ``x^a`` is a divisibility scan.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

Exponent = tuple[int, ...]


class InputError(ValueError):
    """Malformed input: mismatched lengths, negative exponents, bad faces."""


def as_exponent(a: Iterable[int], n: int | None = None) -> Exponent:
    vec = tuple(int(x) for x in a)
    if any(x < 0 for x in vec):
        raise InputError(f"negative exponent in {vec}")
    if n is not None and len(vec) != n:
        raise InputError(f"expected {n} coordinates, got {len(vec)}")
    return vec


def zero(n: int) -> Exponent:
    return (0,) * n


def unit(n: int, i: int) -> Exponent:
    return tuple(1 if j == i else 0 for j in range(n))


def divides(g: Sequence[int], a: Sequence[int]) -> bool:
    """True iff ``g <= a`` componentwise."""
    return all(gi <= ai for gi, ai in zip(g, a))


def add(a: Sequence[int], b: Sequence[int]) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Difference as an integer vector (may be negative)."""
    return tuple(x - y for x, y in zip(a, b))


def lcm(a: Sequence[int], b: Sequence[int]) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def support(a: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i, x in enumerate(a) if x)


def box_points(upper: Sequence[int], lower: Sequence[int] | None = None) -> Iterator[Exponent]:
    """All lattice points ``lower <= a <= upper`` in lexicographic order."""
    if lower is None:
        lower = (0,) * len(upper)
    ranges = [range(lo, hi + 1) for lo, hi in zip(lower, upper)]
    return itertools.product(*ranges)


def _minimal(gens: Iterable[Exponent]) -> tuple[Exponent, ...]:
    # Sorting by total degree means a divisor is always seen before its multiples.
    kept: list[Exponent] = []
    for g in sorted(set(gens), key=lambda v: (sum(v), v)):
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return tuple(sorted(kept))


def default_names(n: int) -> tuple[str, ...]:
    if n <= 3:
        return ("x", "y", "z")[:n]
    return tuple(f"x{i + 1}" for i in range(n))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal in ``n`` variables given by its minimal generators.

    The constructor minimalizes whatever it is handed, so two ideals compare
    equal exactly when they are the same ideal. ``generators == ()`` is the
    zero ideal; a zero-vector generator makes it the unit ideal.
    """

    n: int
    generators: tuple[Exponent, ...] = ()
    variables: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise InputError("need at least one variable")
        gens = [as_exponent(g, self.n) for g in self.generators]
        object.__setattr__(self, "generators", _minimal(gens))
        names = tuple(self.variables) or default_names(self.n)
        if len(names) != self.n:
            raise InputError(f"{len(names)} variable names for {self.n} variables")
        object.__setattr__(self, "variables", names)

    def __contains__(self, a) -> bool:
        return contains_monomial(self, a)

    def __len__(self) -> int:
        return len(self.generators)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return zero(self.n) in self.generators

    def with_generators(self, gens: Iterable[Sequence[int]]) -> "MonomialIdeal":
        """Same ring and names, different generators."""
        return MonomialIdeal(self.n, tuple(tuple(g) for g in gens), self.variables)

    def monomial_str(self, a: Sequence[int]) -> str:
        return monomial_str(a, self.variables)


def minimalize(gens: Iterable[Sequence[int]], n: int | None = None,
               variables: Sequence[str] = ()) -> MonomialIdeal:
    """Unique minimal generating set of the ideal spanned by ``gens``."""
    gens = [tuple(g) for g in gens]
    lengths = {len(g) for g in gens}
    if n is not None:
        lengths.add(n)
    if len(lengths) > 1:
        raise InputError(f"mixed vector lengths {sorted(lengths)}")
    if not lengths:
        raise InputError("cannot infer the number of variables from an empty set")
    (size,) = lengths
    return MonomialIdeal(size, tuple(gens), tuple(variables))


def contains_monomial(ideal: MonomialIdeal, a: Sequence[int]) -> bool:
    if len(a) != ideal.n:
        raise InputError(f"vector of length {len(a)} for an ideal in {ideal.n} variables")
    return any(divides(g, a) for g in ideal.generators)


def staircase_bounds(ideal: MonomialIdeal) -> Exponent:
    """Componentwise max over the minimal generators (0 where unused)."""
    out = [0] * ideal.n
    for g in ideal.generators:
        for i, x in enumerate(g):
            if x > out[i]:
                out[i] = x
    return tuple(out)


def monomial_str(a: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for x, name in zip(a, names):
        if x == 1:
            parts.append(name)
        elif x > 1:
            parts.append(f"{name}^{x}")
    return " ".join(parts) if parts else "1"
