"""Canonical invariant forms assembled from octonionic coordinate 1-forms.

Every octonion-valued product below is bracketed exactly as written in its
defining formula; claimed-real results go through ``OctForm.to_real`` so a
surviving imaginary part raises ``NotRealError`` instead of being dropped.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exterior import ExtForm
from .linalg import exact
from .octoform import (
    OctForm,
    QUATERNION_UNITS,
    coord_dw,
    coord_dx,
    coord_dy,
    obar,
    owedge,
)
from .octonion import Octonion, basis, inner, mul

__all__ = [
    "PsiComponents",
    "Psi8Form",
    "f_op",
    "psi_components",
    "psi_blocks",
    "psi_kappa",
    "psi8",
    "scaled_psi8",
    "PSI8_SCALE",
    "KAPPA",
    "kaehler",
    "kraines_standard",
    "kraines_octonionic",
    "cayley",
    "associative",
    "x_mask",
    "y_mask",
    "bidegree",
    "swap_blocks",
]

X_MASK = 0x00FF
Y_MASK = 0xFF00
KAPPA = (1, 4, 6, 4, 1)
PSI8_SCALE = Fraction(-1, 4 * 720)


def x_mask(m: int) -> int:
    return m & X_MASK


def y_mask(m: int) -> int:
    return (m & Y_MASK) >> 8


def bidegree(m: int) -> tuple[int, int]:
    return (m & X_MASK).bit_count(), (m & Y_MASK).bit_count()


def swap_blocks(phi: ExtForm) -> ExtForm:
    """Pullback along (u1, u2) -> (u2, u1) on R^16.

    Moving a monomial's y-factors in front of its x-factors costs
    (-1)^(k l) for bidegree (k, l).
    """
    out = {}
    for m, c in phi.terms.items():
        k, l = bidegree(m)
        swapped = ((m & X_MASK) << 8) | ((m & Y_MASK) >> 8)
        out[swapped] = -c if (k * l) & 1 else c
    return ExtForm(phi.dim, out, phi.degree)


def f_op(a1: OctForm, a2: OctForm, a3: OctForm, a4: OctForm) -> OctForm:
    """((conj(a1) ^ a2) ^ conj(a3)) ^ a4."""
    return owedge(owedge(owedge(obar(a1), a2), obar(a3)), a4)


@dataclass(frozen=True)
class PsiComponents:
    psi40: OctForm
    psi31: OctForm
    psi13: OctForm
    psi04: OctForm


@lru_cache(maxsize=1)
def psi_components() -> PsiComponents:
    dx, dy = coord_dx(), coord_dy()
    return PsiComponents(
        psi40=f_op(dx, dx, dx, dx),
        psi31=f_op(dy, dx, dx, dx),
        psi13=f_op(dx, dy, dy, dy),
        psi04=f_op(dy, dy, dy, dy),
    )


@lru_cache(maxsize=1)
def _blocks() -> tuple[ExtForm, ...]:
    p = psi_components()
    b80 = owedge(p.psi40, obar(p.psi40)).to_real("Psi80")
    b62 = owedge(p.psi31, obar(p.psi31)).to_real("Psi62")
    mixed = owedge(p.psi31, p.psi13) + owedge(obar(p.psi13), obar(p.psi31))
    b44 = mixed.to_real("Psi44") * Fraction(-5, 6)
    b26 = owedge(p.psi13, obar(p.psi13)).to_real("Psi26")
    b08 = owedge(p.psi04, obar(p.psi04)).to_real("Psi08")
    return b80, b62, b44, b26, b08


def psi_blocks() -> dict[str, ExtForm]:
    """The five real blocks Psi80, Psi62, Psi44, Psi26, Psi08 of pure bidegree."""
    return dict(zip(("80", "62", "44", "26", "08"), _blocks()))


def psi_kappa(kappa=KAPPA) -> ExtForm:
    """sum_i kappa_i Psi_{8-2i, 2i}."""
    if len(kappa) != 5:
        raise ValueError("kappa needs five entries")
    total = ExtForm.zero(16, 8)
    for k, block in zip(kappa, _blocks()):
        total = total + block * k
    return total


@dataclass(frozen=True)
class Psi8Form:
    form: ExtForm
    grouping: str


def _psi8_eq13() -> ExtForm:
    p = psi_components()
    total = (
        owedge(p.psi40, obar(p.psi40))
        + owedge(p.psi31, obar(p.psi31)) * 4
        - (owedge(p.psi31, p.psi13) + owedge(obar(p.psi13), obar(p.psi31))) * 5
        + owedge(p.psi13, obar(p.psi13)) * 4
        + owedge(p.psi04, obar(p.psi04))
    )
    return total.to_real("Psi8")


_GROUPINGS = {"eq13": _psi8_eq13, "eq20": lambda: psi_kappa(KAPPA)}


@lru_cache(maxsize=None)
def psi8(grouping: str = "eq13") -> Psi8Form:
    """The invariant 8-form, built either from the four Psi components directly
    ("eq13") or as the binomial combination of the five real blocks ("eq20")."""
    try:
        build = _GROUPINGS[grouping]
    except KeyError:
        raise ValueError(f"unknown grouping {grouping!r}; use one of {sorted(_GROUPINGS)}") from None
    return Psi8Form(build(), grouping)


def scaled_psi8() -> ExtForm:
    """-1/(4 6!) Psi8; integer coefficients."""
    form = psi8("eq13").form * PSI8_SCALE
    if not form.is_integral():
        raise ArithmeticError("scaled Psi8 has non-integer coefficients")
    return form


def _left(u: Octonion):
    return lambda v: mul(u, v)


def kaehler(n: int) -> ExtForm:
    """(e1/2) sum_j dz_j ^ conj(dz_j) on C^n = R^(2n).

    Coordinates are interleaved: x^j at bit 2j and y^j at bit 2j+1, with
    dz_j = dx^j + e1 dy^j.
    """
    if n < 1:
        raise ValueError("n must be positive")
    dim = 2 * n
    total = OctForm(dim, degree=2)
    for j in range(n):
        dz = OctForm(dim, {1 << (2 * j): basis(0), 1 << (2 * j + 1): basis(1)}, 1)
        total = total + owedge(dz, obar(dz))
    half_i = basis(1) * Fraction(1, 2)
    return total.map_coeffs(_left(half_i)).to_real("Kaehler form")


def _quaternion_two_form(n: int, unit: int) -> ExtForm:
    # (u, v) -> sum_i <u_i e_unit, v_i> on H^n
    h = [basis(q) for q in QUATERNION_UNITS]
    e = basis(unit)
    block = [[inner(mul(h[r], e), h[s]) for s in range(4)] for r in range(4)]
    dim = 4 * n
    matrix = [[0] * dim for _ in range(dim)]
    for i in range(n):
        for r in range(4):
            for s in range(4):
                matrix[4 * i + r][4 * i + s] = block[r][s]
    return ExtForm.from_matrix(matrix)


def kraines_standard(n: int) -> ExtForm:
    """Omega_I^2 + Omega_J^2 + Omega_K^2 on H^n (see ``coord_dw`` for the layout)."""
    if n < 1:
        raise ValueError("n must be positive")
    total = ExtForm.zero(4 * n, 4)
    for unit in (1, 2, 4):
        om = _quaternion_two_form(n, unit)
        total = total + (om ^ om)
    return total


def kraines_octonionic(n: int) -> ExtForm:
    """-(1/4) sum_{i,j} Omega_ij ^ conj(Omega_ij) with Omega_ij = dw_i ^ conj(dw_j)."""
    if n < 1:
        raise ValueError("n must be positive")
    dw = [coord_dw(i, n) for i in range(1, n + 1)]
    total = OctForm(4 * n, degree=4)
    for a in dw:
        for b in dw:
            om = owedge(a, obar(b))
            total = total + owedge(om, obar(om))
    return total.to_real("Kraines form") * Fraction(-1, 4)


def cayley() -> ExtForm:
    """-(1/24) (dx ^ conj dx) ^ (dx ^ conj dx) on O = R^8."""
    dx = coord_dx(8)
    sq = owedge(dx, obar(dx))
    return owedge(sq, sq).to_real("Cayley form") * Fraction(-1, 24)


def associative() -> ExtForm:
    """-(1/12) [(dx ^ dx) ^ dx + dx ^ (dx ^ dx)] on Im O = R^7.

    dx = sum_{i=1..7} e_i dx^i with dx^i stored at bit i-1.
    """
    dx = OctForm(7, {1 << (i - 1): basis(i) for i in range(1, 8)}, 1)
    sq = owedge(dx, dx)
    total = owedge(sq, dx) + owedge(dx, sq)
    return total.to_real("associative form") * Fraction(-1, 12)
