"""Exact integer and rational linear algebra on lists of rows.

Everything here works on Python ints and ``Fraction``; no floating point.
Matrices are lists of row lists.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(m: Sequence[Sequence[int]], ncols: int | None = None) -> Matrix:
    if not m:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(m: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in m]


def hermite(m: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix]:
    """Row Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``U @ m == H``. ``H`` is in
    row echelon form, pivots are positive, entries above a pivot lie in
    ``[0, pivot)``. Zero rows are kept at the bottom.
    """
    h = [list(map(int, row)) for row in m]
    rows = len(h)
    cols = len(h[0]) if rows else 0
    u = identity(rows)
    piv_row = 0
    for c in range(cols):
        if piv_row == rows:
            break
        # Euclid on column c among rows piv_row.. until one nonzero remains.
        while True:
            nz = [i for i in range(piv_row, rows) if h[i][c]]
            if not nz:
                break
            best = min(nz, key=lambda i: abs(h[i][c]))
            h[piv_row], h[best] = h[best], h[piv_row]
            u[piv_row], u[best] = u[best], u[piv_row]
            done = True
            for i in range(piv_row + 1, rows):
                if h[i][c]:
                    q = h[i][c] // h[piv_row][c]
                    h[i] = [x - q * y for x, y in zip(h[i], h[piv_row])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[piv_row])]
                    if h[i][c]:
                        done = False
            if done:
                break
        if not h[piv_row][c]:
            continue
        if h[piv_row][c] < 0:
            h[piv_row] = [-x for x in h[piv_row]]
            u[piv_row] = [-x for x in u[piv_row]]
        p = h[piv_row][c]
        for i in range(piv_row):
            q = h[i][c] // p
            if q:
                h[i] = [x - q * y for x, y in zip(h[i], h[piv_row])]
                u[i] = [x - q * y for x, y in zip(u[i], u[piv_row])]
        piv_row += 1
    return h, u


def hnf_basis(vectors: Sequence[Sequence[int]], n: int) -> Matrix:
    """Canonical lattice basis (nonzero HNF rows) of the span of ``vectors``."""
    if not vectors:
        return []
    h, _ = hermite(vectors)
    return [row for row in h if any(row)][: n]


def rank(m: Sequence[Sequence[int]]) -> int:
    if not m:
        return 0
    h, _ = hermite(m)
    return sum(1 for row in h if any(row))


def kernel_basis(m: Sequence[Sequence[int]], n: int) -> Matrix:
    """Integer basis of ``{v in Z^n : m v = 0}`` in Hermite normal form."""
    if not m:
        return identity(n)
    h, u = hermite(transpose(m))
    kern = [u[i] for i in range(n) if not any(h[i])]
    return hnf_basis(kern, n)


def reduce_mod_lattice(v: Sequence[int], basis: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Canonical coset representative of ``v`` modulo an HNF row basis."""
    v = list(v)
    for row in basis:
        c = next(i for i, x in enumerate(row) if x)
        q = v[c] // row[c]
        if q:
            v = [x - q * y for x, y in zip(v, row)]
    return tuple(v)


def in_lattice(v: Sequence[int], basis: Sequence[Sequence[int]]) -> bool:
    return not any(reduce_mod_lattice(v, basis))


def solve_in_lattice(v: Sequence[int], basis: Sequence[Sequence[int]]) -> list[int] | None:
    """Integer coordinates of ``v`` in an HNF row basis, or ``None``."""
    v = list(v)
    coords = []
    for row in basis:
        c = next(i for i, x in enumerate(row) if x)
        q, r = divmod(v[c], row[c])
        if r:
            return None
        coords.append(q)
        v = [x - q * y for x, y in zip(v, row)]
    return coords if not any(v) else None


def smith(m: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form ``(U, D, V)`` with ``U @ m @ V == D``.

    ``U`` and ``V`` are unimodular, ``D`` is diagonal with non-negative
    entries, each dividing the next.
    """
    d = [list(map(int, row)) for row in m]
    rows = len(d)
    cols = len(d[0]) if rows else 0
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst -= q * row_src
        d[dst] = [x - q * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):  # col_dst -= q * col_src
        for row in d:
            row[dst] -= q * row[src]
        for row in v:
            row[dst] -= q * row[src]

    for t in range(min(rows, cols)):
        while True:
            nz = [(abs(d[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if d[i][j]]
            if not nz:
                break
            _, i, j = min(nz)
            swap_rows(t, i)
            swap_cols(t, j)
            p = d[t][t]
            clean = True
            for i in range(t + 1, rows):
                q = d[i][t] // p
                if q:
                    add_row(i, t, q)
                if d[i][t]:
                    clean = False
            for j in range(t + 1, cols):
                q = d[t][j] // p
                if q:
                    add_col(j, t, q)
                if d[t][j]:
                    clean = False
            if not clean:
                continue
            # Divisibility: fold a row holding a non-multiple into row t.
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if d[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], -1)
        if t < rows and t < cols and d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
    return u, d, v


def determinant_is_unit(m: Sequence[Sequence[int]]) -> bool:
    """``|det m| == 1`` for a square integer matrix."""
    if not m:
        return True
    h, _ = hermite(m)
    prod = 1
    for i, row in enumerate(h):
        prod *= row[i] if i < len(row) else 0
    return abs(prod) == 1


def frac_rank(m: Sequence[Sequence[Fraction | int]]) -> int:
    """Rank over Q by Gaussian elimination."""
    a = [[Fraction(x) for x in row] for row in m]
    if not a:
        return 0
    r = 0
    for c in range(len(a[0])):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return r


def solve_rational(m: Sequence[Sequence[int]], b: Sequence[int]) -> list[Fraction] | None:
    """One solution of ``m x = b`` over Q, ``None`` if inconsistent."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(m, b)]
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        a[r] = [x / a[r][c] for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    if any(a[i][cols] for i in range(r, rows)):
        return None
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = a[i][cols]
    return x


def primitive(v: Sequence[Fraction | int]) -> tuple[int, ...]:
    """Scale a rational vector to the primitive integer vector on its ray."""
    fr = [Fraction(x) for x in v]
    den = lcm(*(x.denominator for x in fr)) if fr else 1
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints) if g else tuple(ints)


# -- Fourier-Motzkin ---------------------------------------------------------------

def fourier_motzkin(a: Sequence[Sequence[int]], b: Sequence[int]):
    """Decide ``a x >= b`` over Q.

    Returns ``(True, x)`` with a rational solution, or ``(False, y)`` with
    ``y >= 0``, ``y @ a == 0`` and ``y @ b > 0`` (Farkas certificate).
    """
    m = len(a)
    nvar = len(a[0]) if m else 0
    # Each row: (coeffs, rhs, multipliers over the original rows).
    system = [([Fraction(x) for x in a[i]], Fraction(b[i]),
               [Fraction(int(j == i)) for j in range(m)]) for i in range(m)]
    stages = []
    for k in range(nvar):
        stages.append(system)
        pos = [r for r in system if r[0][k] > 0]
        neg = [r for r in system if r[0][k] < 0]
        nxt = [r for r in system if r[0][k] == 0]
        for pc, pb, pm in pos:
            for nc, nb, nm in neg:
                s, t = -nc[k], pc[k]
                coeffs = [s * x + t * y for x, y in zip(pc, nc)]
                nxt.append((coeffs, s * pb + t * nb, [s * x + t * y for x, y in zip(pm, nm)]))
        system = _dedupe(nxt)
    for _, rhs, mult in system:
        if rhs > 0:
            return False, mult
    x = [Fraction(0)] * nvar
    for k in reversed(range(nvar)):
        lo, hi = None, None
        for coeffs, rhs, _ in stages[k]:
            ck = coeffs[k]
            if not ck:
                continue
            rest = rhs - sum(coeffs[j] * x[j] for j in range(k + 1, nvar))
            bound = rest / ck
            if ck > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is not None:
            x[k] = lo
        elif hi is not None:
            x[k] = min(hi, Fraction(0))
    return True, x


def _dedupe(rows):
    seen = {}
    for coeffs, rhs, mult in rows:
        if not any(coeffs):
            # keep only the most violated trivial constraint per sign
            key = ("trivial", rhs > 0)
        else:
            # normalize by the first nonzero coefficient magnitude
            s = abs(next(c for c in coeffs if c))
            key = (tuple(c / s for c in coeffs), rhs / s)
        if key not in seen:
            seen[key] = (coeffs, rhs, mult)
    return list(seen.values())
