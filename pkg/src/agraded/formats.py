"""Text formats for ideals and grading matrices.

Ideal files::

    # comment
    vars: x y z
    x^2 y          # monomial generator
    y^2 - x z      # pure-difference binomial

Matrix files: first line ``d n``, then ``d`` rows of ``n`` integers.
"""
from __future__ import annotations

import re
from importlib import resources
from pathlib import Path
from typing import Sequence, Union

from .binomial import BinomialIdeal
from .exponents import InputError, MonomialIdeal, monomial_str
from .grading import GradingMap

Ideal = Union[MonomialIdeal, BinomialIdeal]

_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_POWER = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)\^(-?\d+)$")


class ParseError(InputError):
    def __init__(self, msg: str, line: int | None = None):
        super().__init__(f"line {line}: {msg}" if line is not None else msg)
        self.line = line


def _strip(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _monomial(tokens: str, index: dict[str, int], no: int) -> tuple[int, ...]:
    a = [0] * len(index)
    words = tokens.split()
    if not words:
        raise ParseError("empty generator", no)
    for tok in words:
        if tok == "1":
            continue
        m = _POWER.match(tok)
        name, exp = (m.group(1), int(m.group(2))) if m else (tok, 1)
        if not m and not _NAME.match(tok):
            raise ParseError(f"bad token {tok!r}", no)
        if exp < 0:
            raise ParseError(f"negative exponent in {tok!r}", no)
        if name not in index:
            raise ParseError(f"unknown variable {name!r}", no)
        a[index[name]] += exp
    return tuple(a)


def parse_ideal(text: str) -> Ideal:
    """Monomial ideal unless some line holds a binomial."""
    lines = list(_strip(text))
    if not lines or not lines[0][1].startswith("vars:"):
        raise ParseError("first line must be 'vars: <name> ...'", lines[0][0] if lines else None)
    no, head = lines[0]
    names = head[len("vars:"):].split()
    if not names:
        raise ParseError("no variables declared", no)
    for name in names:
        if not _NAME.match(name):
            raise ParseError(f"bad variable name {name!r}", no)
    if len(set(names)) != len(names):
        raise ParseError("duplicate variable name", no)
    index = {name: i for i, name in enumerate(names)}
    mons, bins = [], []
    for no, line in lines[1:]:
        if "-" in line:
            parts = line.split("-")
            if len(parts) != 2:
                raise ParseError("a binomial has exactly one '-'", no)
            a, b = (_monomial(p, index, no) for p in parts)
            if a == b:
                raise ParseError("binomial with equal terms is zero", no)
            bins.append((a, b))
        else:
            mons.append(_monomial(line, index, no))
    n = len(names)
    if bins:
        return BinomialIdeal(n, tuple(mons), tuple(bins), tuple(names))
    return MonomialIdeal(n, tuple(mons), tuple(names))


def format_ideal(ideal: Ideal) -> str:
    names = ideal.variables
    out = ["vars: " + " ".join(names)]
    if isinstance(ideal, MonomialIdeal):
        out += [monomial_str(a, names) for a in ideal.generators]
    else:
        out += [monomial_str(a, names) for a in ideal.monomial_gens]
        out += [f"{monomial_str(a, names)} - {monomial_str(b, names)}"
                for a, b in ideal.binomial_gens]
    return "\n".join(out) + "\n"


def parse_matrix(text: str) -> GradingMap:
    lines = list(_strip(text))
    if not lines:
        raise ParseError("empty matrix file")
    no, head = lines[0]
    try:
        d, n = (int(x) for x in head.split())
    except ValueError:
        raise ParseError("first line must be 'd n'", no) from None
    if d < 1 or n < 1:
        raise ParseError("dimensions must be positive", no)
    rows = []
    for no, line in lines[1:]:
        try:
            row = [int(x) for x in line.split()]
        except ValueError:
            raise ParseError("non-integer entry", no) from None
        if len(row) != n:
            raise ParseError(f"row has {len(row)} entries, expected {n}", no)
        rows.append(row)
    if len(rows) != d:
        raise ParseError(f"found {len(rows)} rows, expected {d}")
    return GradingMap.from_rows(rows)


def format_matrix(A: GradingMap) -> str:
    lines = [f"{A.d} {A.n}"] + [" ".join(str(x) for x in row) for row in A.rows]
    return "\n".join(lines) + "\n"


def data_path(name: str) -> Path:
    """Path of a file shipped in the package's ``data`` directory."""
    return Path(str(resources.files("agraded") / "data" / name))


def read_text(path: str | Path) -> str:
    """Read ``path``, falling back to a shipped data file of that name."""
    p = Path(path)
    if not p.exists() and p.parent == Path(".") and data_path(p.name).exists():
        p = data_path(p.name)
    return p.read_text()


def parse_vector(text: str, n: int | None = None) -> tuple[int, ...]:
    try:
        vec = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"bad integer list {text!r}") from None
    if n is not None and len(vec) != n:
        raise InputError(f"expected {n} comma-separated integers, got {len(vec)}")
    return vec


def parse_permutation(text: str, names: Sequence[str]) -> tuple[int, ...]:
    """Variable names or 0-based indices, comma separated."""
    index = {name: i for i, name in enumerate(names)}
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok in index:
            out.append(index[tok])
        elif tok.isdigit():
            out.append(int(tok))
        else:
            raise InputError(f"unknown variable {tok!r} in tiebreak")
    if sorted(out) != list(range(len(names))):
        raise InputError("tiebreak must list every variable exactly once")
    return tuple(out)
