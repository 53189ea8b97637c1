"""Exact octonion arithmetic in the basis {1, e1, ..., e7}.

The product is fixed by e_j^2 = -1, anticommutativity of distinct imaginary
units and the seven cyclic quaternionic triples

    (1,2,4) (2,3,5) (3,4,6) (4,5,7) (5,6,1) (6,7,2) (7,1,3)

i.e. e_{n+1} e_{n+2} = e_{n+4} with indices taken in {1, ..., 7}.
Coefficients are Python ints or ``fractions.Fraction``; nothing here touches
floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .linalg import SquareMatrix, exact as _exact

__all__ = [
    "MultTable",
    "Octonion",
    "LinOp8",
    "TRIPLES",
    "build_mult_table",
    "MULT",
    "basis",
    "mul",
    "conj",
    "real_part",
    "inner",
    "norm2",
    "rmul_matrix",
    "lmul_matrix",
    "index_product",
]


def _wrap7(n: int) -> int:
    # representatives 1..7, so 7 stays 7 and 9 becomes 2
    return (n - 1) % 7 + 1


TRIPLES: tuple[tuple[int, int, int], ...] = tuple(
    (_wrap7(1 + i), _wrap7(2 + i), _wrap7(4 + i)) for i in (7, 1, 2, 3, 4, 5, 6)
)


class MultTable:
    """8x8 table of ``(sign, index)`` pairs with ``e_i e_j = sign * e_index``."""

    __slots__ = ("entries",)

    def __init__(self, entries: Sequence[Sequence[tuple[int, int]]]):
        self.entries = tuple(tuple(row) for row in entries)

    def __getitem__(self, ij: tuple[int, int]) -> tuple[int, int]:
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MultTable) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)


def build_mult_table(triples: Iterable[tuple[int, int, int]] = TRIPLES) -> MultTable:
    """Build the multiplication table from quaternionic triples.

    Each triple (a, b, c) contributes the cyclic products ab = c, bc = a,
    ca = b and their anticommuted negatives. Raises ``ValueError`` if two
    triples try to assign the same product differently.
    """
    table: list[list[tuple[int, int] | None]] = [[None] * 8 for _ in range(8)]

    def put(i: int, j: int, value: tuple[int, int]) -> None:
        old = table[i][j]
        if old is not None and old != value:
            raise ValueError(f"inconsistent product e{i} e{j}: {old} vs {value}")
        table[i][j] = value

    for j in range(8):
        put(0, j, (1, j))
        put(j, 0, (1, j))
    for j in range(1, 8):
        put(j, j, (-1, 0))
    for a, b, c in triples:
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            put(x, y, (1, z))
            put(y, x, (-1, z))
    missing = [(i, j) for i in range(8) for j in range(8) if table[i][j] is None]
    if missing:
        raise ValueError(f"triples leave products undefined: {missing[:4]}")
    return MultTable(table)


MULT = build_mult_table(TRIPLES)
_SIGN = tuple(tuple(MULT.entries[i][j][0] for j in range(8)) for i in range(8))
_IDX = tuple(tuple(MULT.entries[i][j][1] for j in range(8)) for i in range(8))
# per left index i: list of (j, sign, k) with e_i e_j = sign e_k
_ROWS = tuple(tuple((j, _SIGN[i][j], _IDX[i][j]) for j in range(8)) for i in range(8))


class Octonion:
    """Immutable octonion with exact rational coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable = (0,) * 8):
        c = tuple(_exact(x) for x in coords)
        if len(c) != 8:
            raise ValueError("an octonion has exactly 8 coordinates")
        object.__setattr__(self, "coords", c)

    @classmethod
    def _raw(cls, coords: tuple) -> "Octonion":
        o = object.__new__(cls)
        object.__setattr__(o, "coords", coords)
        return o

    def __setattr__(self, name, value):
        raise AttributeError("Octonion is immutable")

    @classmethod
    def scalar(cls, r) -> "Octonion":
        return cls((r, 0, 0, 0, 0, 0, 0, 0))

    def __getitem__(self, i: int):
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __repr__(self) -> str:
        return f"Octonion({list(self.coords)!r})"

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coords):
            if c:
                parts.append(f"{c}" if i == 0 else f"{c}*e{i}")
        return " + ".join(parts) or "0"

    def __eq__(self, other) -> bool:
        if isinstance(other, Octonion):
            return self.coords == other.coords
        if isinstance(other, (int, Fraction)):
            return self.coords == (other, 0, 0, 0, 0, 0, 0, 0)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coords)

    def __bool__(self) -> bool:
        return any(self.coords)

    def __add__(self, other: "Octonion") -> "Octonion":
        if not isinstance(other, Octonion):
            other = Octonion.scalar(other)
        return Octonion._raw(tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self) -> "Octonion":
        return Octonion._raw(tuple(-a for a in self.coords))

    def __sub__(self, other: "Octonion") -> "Octonion":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return mul(self, other)
        other = _exact(other)
        return Octonion._raw(tuple(a * other for a in self.coords))

    def __rmul__(self, other):
        other = _exact(other)
        return Octonion._raw(tuple(other * a for a in self.coords))

    def __truediv__(self, r) -> "Octonion":
        r = Fraction(_exact(r))
        return Octonion(a / r for a in self.coords)

    def conj(self) -> "Octonion":
        return conj(self)

    @property
    def real(self):
        return self.coords[0]

    def is_real(self) -> bool:
        return not any(self.coords[1:])

    def norm2(self):
        return norm2(self)

    def inverse(self) -> "Octonion":
        n = Fraction(norm2(self))
        if not n:
            raise ZeroDivisionError("zero octonion has no inverse")
        return Octonion(c / n for c in conj(self).coords)


@lru_cache(maxsize=None)
def basis(i: int) -> Octonion:
    """The basis octonion e_i (e_0 = 1)."""
    c = [0] * 8
    c[i] = 1
    return Octonion(c)


def mul(u: Octonion, v: Octonion) -> Octonion:
    out = [0] * 8
    vc = v.coords
    for i, a in enumerate(u.coords):
        if not a:
            continue
        for j, s, k in _ROWS[i]:
            b = vc[j]
            if b:
                if s > 0:
                    out[k] += a * b
                else:
                    out[k] -= a * b
    return Octonion._raw(tuple(out))


def conj(u: Octonion) -> Octonion:
    c = u.coords
    return Octonion._raw((c[0],) + tuple(-x for x in c[1:]))


def real_part(u: Octonion):
    return u.coords[0]


def inner(u: Octonion, v: Octonion):
    """Euclidean inner product, equal to Re(u conj(v))."""
    return sum(a * b for a, b in zip(u.coords, v.coords))


def norm2(u: Octonion):
    return sum(a * a for a in u.coords)


class LinOp8(SquareMatrix):
    """Exact 8x8 matrix acting on octonion coordinate vectors."""

    __slots__ = ()
    size = 8

    def __call__(self, u: Octonion) -> Octonion:
        return Octonion._raw(self.apply(u.coords))


def rmul_matrix(u: Octonion) -> LinOp8:
    """Matrix of x -> x u."""
    cols = [mul(basis(j), u).coords for j in range(8)]
    return LinOp8(list(zip(*cols)))


def lmul_matrix(u: Octonion) -> LinOp8:
    """Matrix of x -> u x."""
    cols = [mul(u, basis(j)).coords for j in range(8)]
    return LinOp8(list(zip(*cols)))


def index_product(*indices: int) -> int:
    """Index k with e_{i1} e_{i2} ... = +-e_k; the order and bracketing only affect the sign."""
    k = 0
    for i in indices:
        k = _IDX[k][i]
    return k
