"""Sparse exact exterior algebra on R^d, d <= 16.

A basis k-form dx^{i_1} ^ ... ^ dx^{i_k} (i_1 < ... < i_k) is keyed by the
bitmask with bits i_1, ..., i_k set. On R^16 = O^2 bits 0..7 are the x-block
(dx^0..dx^7) and bits 8..15 the y-block (dy^0..dy^7).

Forms are evaluated with the determinant convention

    dx^S(v_1, ..., v_k) = det[ v_j[S_i] ]_{i,j}.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .linalg import det as _det
from .linalg import exact as _exact

__all__ = [
    "MAX_DIM",
    "ExtForm",
    "basis_sign",
    "mask_of",
    "indices_of",
    "wedge",
    "hodge_star",
    "det_form",
    "substitute",
    "derive",
]

MAX_DIM = 16


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        if m >> i & 1:
            raise ValueError(f"repeated index {i}")
        m |= 1 << i
    return m


def indices_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def basis_sign(a: int, b: int) -> int:
    """Sign of dx^a ^ dx^b relative to dx^(a|b); 0 if the masks overlap."""
    if a & b:
        return 0
    inversions = 0
    while b:
        low = b & -b
        inversions += (a & ~((low << 1) - 1)).bit_count()
        b ^= low
    return -1 if inversions & 1 else 1


class ExtForm:
    """Real exterior k-form on R^dim with exact rational coefficients."""

    __slots__ = ("dim", "degree", "terms")

    def __init__(self, dim: int, terms: Mapping[int, object] = None, degree: int = None):
        if not 0 <= dim <= MAX_DIM:
            raise ValueError(f"dimension {dim} outside 0..{MAX_DIM}")
        clean = {}
        for m, c in (terms or {}).items():
            c = _exact(c)
            if c:
                if m >> dim:
                    raise ValueError(f"mask {m:#x} exceeds dimension {dim}")
                clean[m] = c
        degrees = {m.bit_count() for m in clean}
        if len(degrees) > 1:
            raise ValueError(f"mixed degrees {sorted(degrees)} in one form")
        if degrees:
            (d,) = degrees
            if degree is not None and degree != d:
                raise ValueError(f"declared degree {degree} but terms have degree {d}")
            degree = d
        self.dim = dim
        self.degree = 0 if degree is None else degree
        self.terms = clean

    @classmethod
    def _raw(cls, dim: int, degree: int, terms: dict) -> "ExtForm":
        f = object.__new__(cls)
        f.dim = dim
        f.degree = degree
        f.terms = terms
        return f

    @classmethod
    def zero(cls, dim: int, degree: int) -> "ExtForm":
        return cls._raw(dim, degree, {})

    @classmethod
    def basis(cls, dim: int, indices: Iterable[int], coeff=1) -> "ExtForm":
        """c dx^{i_1} ^ ... ^ dx^{i_k}; unordered indices pick up the permutation sign."""
        idx = list(indices)
        form = cls._raw(dim, 0, {0: _exact(coeff)})
        for i in idx:
            form = form ^ cls._raw(dim, 1, {1 << i: 1})
        return form

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence]) -> "ExtForm":
        """Alternating part of the bilinear form (u, v) -> u^T M v."""
        n = len(matrix)
        terms = {}
        for i in range(n):
            for j in range(i + 1, n):
                c = Fraction(_exact(matrix[i][j]) - _exact(matrix[j][i]), 2)
                if c:
                    terms[(1 << i) | (1 << j)] = c
        return cls(n, terms, 2)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def __getitem__(self, key) -> object:
        if not isinstance(key, int):
            key = mask_of(key)
        return self.terms.get(key, 0)

    def __repr__(self) -> str:
        return f"ExtForm(dim={self.dim}, degree={self.degree}, terms={len(self.terms)})"

    def __eq__(self, other) -> bool:
        if isinstance(other, ExtForm):
            if self.dim != other.dim:
                return False
            if self.terms or other.terms:
                return self.terms == other.terms
            return self.degree == other.degree
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _check(self, other: "ExtForm") -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: "ExtForm") -> "ExtForm":
        self._check(other)
        if self.terms and other.terms and self.degree != other.degree:
            raise ValueError("cannot add forms of different degree")
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        deg = self.degree if self.terms else other.degree
        return ExtForm._raw(self.dim, deg, out)

    def __neg__(self) -> "ExtForm":
        return ExtForm._raw(self.dim, self.degree, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "ExtForm") -> "ExtForm":
        return self + (-other)

    def __mul__(self, r) -> "ExtForm":
        r = _exact(r)
        if not r:
            return ExtForm.zero(self.dim, self.degree)
        return ExtForm._raw(self.dim, self.degree, {m: _exact(r * c) for m, c in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, r) -> "ExtForm":
        return self * (1 / Fraction(_exact(r)))

    def __xor__(self, other: "ExtForm") -> "ExtForm":
        return wedge(self, other)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) or c.denominator == 1 for c in self.terms.values())

    def coefficients(self) -> list:
        return [c for _, c in self]

    def restrict(self, predicate) -> "ExtForm":
        """Keep the terms whose mask satisfies ``predicate``."""
        return ExtForm._raw(self.dim, self.degree, {m: c for m, c in self.terms.items() if predicate(m)})

    def __call__(self, *vectors: Sequence) -> object:
        if len(vectors) != self.degree:
            raise ValueError(f"{self.degree}-form evaluated on {len(vectors)} vectors")
        if self.degree == 0:
            return self.terms.get(0, 0)
        total = 0
        for m, c in self.terms.items():
            idx = indices_of(m)
            total += c * _det([[v[i] for v in vectors] for i in idx])
        return _exact(total)


def wedge(phi: ExtForm, psi: ExtForm) -> ExtForm:
    phi._check(psi)
    degree = phi.degree + psi.degree
    out: dict[int, object] = {}
    if degree > phi.dim:
        return ExtForm.zero(phi.dim, degree)
    for a, x in phi.terms.items():
        for b, y in psi.terms.items():
            if a & b:
                continue
            s = basis_sign(a, b)
            m = a | b
            v = out.get(m, 0) + (x * y if s > 0 else -(x * y))
            if v:
                out[m] = v
            else:
                del out[m]
    return ExtForm._raw(phi.dim, degree, out)


def hodge_star(phi: ExtForm) -> ExtForm:
    """Euclidean Hodge star with orientation dx^0 ^ ... ^ dx^(d-1)."""
    d = phi.dim
    full = (1 << d) - 1
    out = {}
    for m, c in phi.terms.items():
        comp = full ^ m
        out[comp] = c * basis_sign(m, comp)
    return ExtForm._raw(d, d - phi.degree, out)


def det_form(d: int) -> ExtForm:
    """The top form dx^0 ^ ... ^ dx^(d-1)."""
    return ExtForm(d, {(1 << d) - 1: 1}, d)


def _row_forms(matrix: Sequence[Sequence], dim: int) -> list[dict[int, object]]:
    rows = []
    for row in matrix:
        rows.append({1 << j: _exact(a) for j, a in enumerate(row) if a})
    if len(rows) != dim:
        raise ValueError(f"{len(rows)}x? matrix applied to forms on R^{dim}")
    return rows


def _wedge_terms(acc: dict[int, object], one: dict[int, object]) -> dict[int, object]:
    out: dict[int, object] = {}
    for a, x in acc.items():
        for b, y in one.items():
            if a & b:
                continue
            s = basis_sign(a, b)
            m = a | b
            v = out.get(m, 0) + (x * y if s > 0 else -(x * y))
            if v:
                out[m] = v
            else:
                del out[m]
    return out


def substitute(matrix: Sequence[Sequence], phi: ExtForm) -> ExtForm:
    """Pullback ``(g* phi)(v_1..v_k) = phi(g v_1, ..., g v_k)``.

    Every factor dx^a is replaced by sum_b g[a][b] dx^b; cost scales with the
    number of nonzero entries per row, so sparse (e.g. signed permutation
    plus identity) matrices stay cheap.
    """
    rows = _row_forms(matrix, phi.dim)
    out: dict[int, object] = {}
    for m, c in phi.terms.items():
        acc: dict[int, object] = {0: c}
        for i in indices_of(m):
            acc = _wedge_terms(acc, rows[i])
            if not acc:
                break
        for k, v in acc.items():
            t = out.get(k, 0) + v
            if t:
                out[k] = t
            else:
                del out[k]
    return ExtForm._raw(phi.dim, phi.degree, {k: _exact(v) for k, v in out.items()})


def derive(matrix: Sequence[Sequence], phi: ExtForm) -> ExtForm:
    """Derivation action ``sum_i phi(v_1, ..., A v_i, ..., v_k)`` of a matrix A."""
    rows = _row_forms(matrix, phi.dim)
    out: dict[int, object] = {}
    for m, c in phi.terms.items():
        idx = indices_of(m)
        for pos, a in enumerate(idx):
            rest = m & ~(1 << a)
            for b, coef in rows[a].items():
                if b & rest:
                    continue
                # dx^a sits at slot pos; dx^b replaces it and is moved to its sorted slot
                bi = b.bit_length() - 1
                moves = sum(1 for i in idx[:pos] if i > bi) + sum(1 for i in idx[pos + 1 :] if i < bi)
                s = -1 if moves & 1 else 1
                k = rest | b
                v = out.get(k, 0) + s * c * coef
                if v:
                    out[k] = v
                else:
                    del out[k]
    return ExtForm._raw(phi.dim, phi.degree, {k: _exact(v) for k, v in out.items()})


def all_masks(dim: int, degree: int) -> list[int]:
    return [mask_of(c) for c in combinations(range(dim), degree)]
