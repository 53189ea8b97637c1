"""Small exact linear algebra over the rationals (Gaussian elimination)."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Sequence


def exact(x):
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return exact(Fraction(x.numerator, x.denominator))
    if isinstance(x, str):
        return exact(Fraction(x))
    raise TypeError(f"exact rational expected, got {type(x).__name__}")


def det(rows: Sequence[Sequence]) -> Fraction | int:
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            result = -result
        p = m[col][col]
        result *= p
        for r in range(col + 1, n):
            f = m[r][col]
            if f:
                f /= p
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return result.numerator if result.denominator == 1 else result


def rank(rows: Sequence[Sequence]) -> int:
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][col]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col] / p
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


class SquareMatrix:
    """Immutable exact square matrix; subclasses pin the size."""

    __slots__ = ("rows",)
    size: int | None = None

    def __init__(self, rows: Sequence[Sequence]):
        r = tuple(tuple(exact(x) for x in row) for row in rows)
        n = self.size if self.size is not None else len(r)
        if len(r) != n or any(len(row) != n for row in r):
            raise ValueError(f"{type(self).__name__} needs a {n}x{n} matrix")
        object.__setattr__(self, "rows", r)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def _new(self, rows):
        return type(self)(rows)

    @classmethod
    def identity(cls, n: int = None):
        n = cls.size if n is None else n
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int = None):
        n = cls.size if n is None else n
        return cls([[0] * n for _ in range(n)])

    def __len__(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def apply(self, vec: Sequence) -> tuple:
        return tuple(sum(a * x for a, x in zip(row, vec) if a) for row in self.rows)

    def __matmul__(self, other):
        cols = list(zip(*other.rows))
        return self._new([[sum(a * b for a, b in zip(row, col) if a) for col in cols] for row in self.rows])

    def __add__(self, other):
        return self._new([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return self._new([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return self._new([[-a for a in row] for row in self.rows])

    def __rmul__(self, r):
        return self._new([[r * a for a in row] for row in self.rows])

    def __eq__(self, other) -> bool:
        return isinstance(other, SquareMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({[list(r) for r in self.rows]!r})"

    def transpose(self):
        return self._new(list(zip(*self.rows)))

    T = property(transpose)

    def det(self):
        return det(self.rows)

    def is_orthogonal(self) -> bool:
        return self @ self.T == self.identity(len(self.rows))

    def is_skew(self) -> bool:
        return self.T == -self

    def flat(self) -> list:
        return [a for row in self.rows for a in row]
