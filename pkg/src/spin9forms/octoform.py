"""Octonion-valued exterior forms, O (x) Lambda^k V*.

The wedge is (u phi) ^ (v psi) = (uv)(phi ^ psi). It is not associative, so
every caller spells out its bracketing.
"""

from __future__ import annotations

from typing import Callable, Mapping, Sequence

from .exterior import ExtForm, basis_sign, indices_of
from .linalg import det as _det
from .octonion import LinOp8, Octonion, _ROWS, basis, conj, mul

__all__ = [
    "OctForm",
    "NotRealError",
    "owedge",
    "obar",
    "oreal",
    "apply_linear",
    "coord_dx",
    "coord_dy",
    "coord_dw",
    "QUATERNION_UNITS",
    "is_quaternionic",
]

QUATERNION_UNITS = (0, 1, 2, 4)
_QMASK = frozenset(QUATERNION_UNITS)


class NotRealError(ArithmeticError):
    """A form expected to be real has a nonzero imaginary coefficient."""


class OctForm:
    """Octonion-valued k-form on R^dim: sparse map mask -> Octonion."""

    __slots__ = ("dim", "degree", "terms")

    def __init__(self, dim: int, terms: Mapping[int, Octonion] = None, degree: int = None):
        clean = {m: u for m, u in (terms or {}).items() if u}
        for m in clean:
            if m >> dim:
                raise ValueError(f"mask {m:#x} exceeds dimension {dim}")
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
    def _raw(cls, dim: int, degree: int, terms: dict) -> "OctForm":
        f = object.__new__(cls)
        f.dim = dim
        f.degree = degree
        f.terms = terms
        return f

    @classmethod
    def from_real(cls, phi: ExtForm, u: Octonion = None) -> "OctForm":
        """The form u (x) phi (u defaults to 1)."""
        u = basis(0) if u is None else u
        return cls._raw(phi.dim, phi.degree, {m: u * c for m, c in phi.terms.items() if c and u})

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"OctForm(dim={self.dim}, degree={self.degree}, terms={len(self.terms)})"

    def __getitem__(self, mask: int) -> Octonion:
        return self.terms.get(mask, Octonion())

    def __eq__(self, other) -> bool:
        if isinstance(other, OctForm):
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

    def __add__(self, other: "OctForm") -> "OctForm":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        if self.terms and other.terms and self.degree != other.degree:
            raise ValueError("cannot add forms of different degree")
        out = dict(self.terms)
        for m, u in other.terms.items():
            v = out[m] + u if m in out else u
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return OctForm._raw(self.dim, self.degree if self.terms else other.degree, out)

    def __neg__(self) -> "OctForm":
        return OctForm._raw(self.dim, self.degree, {m: -u for m, u in self.terms.items()})

    def __sub__(self, other: "OctForm") -> "OctForm":
        return self + (-other)

    def __mul__(self, r) -> "OctForm":
        out = {m: u * r for m, u in self.terms.items()}
        return OctForm._raw(self.dim, self.degree, {m: u for m, u in out.items() if u})

    __rmul__ = __mul__

    def __xor__(self, other: "OctForm") -> "OctForm":
        return owedge(self, other)

    def component(self, i: int) -> ExtForm:
        """The real form multiplying e_i."""
        return ExtForm(self.dim, {m: u.coords[i] for m, u in self.terms.items()}, self.degree)

    def is_real(self) -> bool:
        return all(u.is_real() for u in self.terms.values())

    def to_real(self, what: str = "form") -> ExtForm:
        """Real part, raising ``NotRealError`` if any imaginary part survives."""
        bad = [m for m, u in self.terms.items() if not u.is_real()]
        if bad:
            raise NotRealError(f"{what} has imaginary coefficients on {len(bad)} monomials")
        return oreal(self)

    def map_coeffs(self, f: Callable[[Octonion], Octonion]) -> "OctForm":
        out = {m: f(u) for m, u in self.terms.items()}
        return OctForm._raw(self.dim, self.degree, {m: u for m, u in out.items() if u})

    def __call__(self, *vectors: Sequence) -> Octonion:
        if len(vectors) != self.degree:
            raise ValueError(f"{self.degree}-form evaluated on {len(vectors)} vectors")
        total = Octonion()
        for m, u in self.terms.items():
            idx = indices_of(m)
            d = _det([[v[i] for v in vectors] for i in idx]) if idx else 1
            if d:
                total = total + u * d
        return total


def owedge(alpha: OctForm, beta: OctForm) -> OctForm:
    if alpha.dim != beta.dim:
        raise ValueError(f"dimension mismatch: {alpha.dim} vs {beta.dim}")
    degree = alpha.degree + beta.degree
    if degree > alpha.dim:
        return OctForm._raw(alpha.dim, degree, {})
    acc: dict[int, list] = {}
    bitems = [(b, v.coords) for b, v in beta.terms.items()]
    for a, u in alpha.terms.items():
        # nonzero coordinates of the left factor, resolved once per term
        left = [(i, x, _ROWS[i]) for i, x in enumerate(u.coords) if x]
        for b, vc in bitems:
            if a & b:
                continue
            s = basis_sign(a, b)
            m = a | b
            out = acc.get(m)
            if out is None:
                out = acc[m] = [0] * 8
            for i, x, row in left:
                if s < 0:
                    x = -x
                for j, sg, k in row:
                    y = vc[j]
                    if y:
                        if sg > 0:
                            out[k] += x * y
                        else:
                            out[k] -= x * y
    terms = {}
    for m, c in acc.items():
        if any(c):
            terms[m] = Octonion._raw(tuple(c))
    return OctForm._raw(alpha.dim, degree, terms)


def obar(alpha: OctForm) -> OctForm:
    return OctForm._raw(alpha.dim, alpha.degree, {m: conj(u) for m, u in alpha.terms.items()})


def oreal(alpha: OctForm) -> ExtForm:
    return ExtForm(alpha.dim, {m: u.coords[0] for m, u in alpha.terms.items()}, alpha.degree)


def apply_linear(F, alpha: OctForm) -> OctForm:
    """Extend an R-linear map of O to forms by F(u phi) = F(u) phi.

    ``F`` is a ``LinOp8`` or any callable Octonion -> Octonion.
    """
    if not callable(F):
        raise TypeError("expected a LinOp8 or a callable on octonions")
    return alpha.map_coeffs(F)


def coord_dx(dim: int = 16, offset: int = 0) -> OctForm:
    """sum_i e_i dx^i, with dx^i stored at bit offset + i."""
    if offset + 8 > dim:
        raise ValueError("coordinate block does not fit")
    return OctForm(dim, {1 << (offset + i): basis(i) for i in range(8)}, 1)


def coord_dy(dim: int = 16) -> OctForm:
    return coord_dx(dim, 8)


def coord_dw(i: int, n: int) -> OctForm:
    """Quaternionic coordinate form dw_i on H^n, H = span{1, e1, e2, e4}.

    Coordinates of u_i over (1, e1, e2, e4) occupy bits 4(i-1) .. 4(i-1)+3.
    """
    if not 1 <= i <= n:
        raise IndexError(f"dw index {i} outside 1..{n}")
    base = 4 * (i - 1)
    return OctForm(4 * n, {1 << (base + r): basis(q) for r, q in enumerate(QUATERNION_UNITS)}, 1)


def is_quaternionic(alpha: OctForm) -> bool:
    return all(not c for u in alpha.terms.values() for k, c in enumerate(u.coords) if k not in _QMASK)
