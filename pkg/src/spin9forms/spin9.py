"""spin(9) inside so(16): generators, one-parameter subgroups and their action on forms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .canon import X_MASK, psi8
from .exterior import ExtForm, derive, substitute
from .linalg import SquareMatrix, exact, rank
from .octonion import LinOp8, Octonion, basis, conj, rmul_matrix

__all__ = [
    "LinOp16",
    "Omega2",
    "gen_I",
    "gen_Ijk",
    "one_param",
    "spin8_element",
    "lie_derivative",
    "pullback",
    "project_80",
    "omega_form",
    "eq2_form",
    "eq2_ratio",
    "spin9_pairs",
    "so16_elementary",
    "bracket",
    "in_spin9_span",
    "expected_bracket",
    "SAMPLED_PAIRS",
    "EQ2_RATIO",
]

# Derived once by running eq2_ratio(); asserted on every verification run.
EQ2_RATIO = Fraction(1, 2)

# Pairs used for finite (one-parameter subgroup) invariance checks.
SAMPLED_PAIRS = ((0, 8), (0, 1), (1, 8), (2, 8), (3, 7), (5, 6), (0, 7), (4, 8), (1, 4), (2, 6), (7, 8), (3, 5))


class LinOp16(SquareMatrix):
    """Exact 16x16 matrix on O^2 coordinates (x-block first)."""

    __slots__ = ()
    size = 16

    @classmethod
    def blocks(cls, a, b, c, d) -> "LinOp16":
        """[[a, b], [c, d]] from four 8x8 blocks (LinOp8 or None for zero)."""
        z = [[0] * 8 for _ in range(8)]
        a, b, c, d = (z if m is None else m.rows for m in (a, b, c, d))
        return cls([list(ra) + list(rb) for ra, rb in zip(a, b)] + [list(rc) + list(rd) for rc, rd in zip(c, d)])

    def __call__(self, vec):
        return self.apply(vec)


def spin9_pairs() -> Iterator[tuple[int, int]]:
    return ((j, k) for j in range(9) for k in range(j + 1, 9))


def _check_index(*idx: int, top: int = 8) -> None:
    for i in idx:
        if not 0 <= i <= top:
            raise IndexError(f"index {i} outside 0..{top}")


@lru_cache(maxsize=None)
def gen_I(j: int) -> LinOp16:
    _check_index(j)
    if j == 8:
        return LinOp16.blocks(LinOp8.identity(), None, None, -LinOp8.identity())
    e = basis(j)
    return LinOp16.blocks(None, rmul_matrix(e), rmul_matrix(conj(e)), None)


@lru_cache(maxsize=None)
def gen_Ijk(j: int, k: int) -> LinOp16:
    return gen_I(j) @ gen_I(k)


def bracket(a: SquareMatrix, b: SquareMatrix) -> SquareMatrix:
    return a @ b - b @ a


def expected_bracket(j: int, k: int, l: int, m: int) -> LinOp16:
    """[I_jk, I_lm] from the commutation rule [I_sa, I_sb] = -2 I_ab (a != b).

    Pairs with no common index, or the same index set, commute.
    """
    if j == k or l == m:
        raise ValueError("indices of a generator must differ")
    shared = {j, k} & {l, m}
    if len(shared) != 1:
        return LinOp16.zeros()
    (s,) = shared
    s1, a = (1, k) if j == s else (-1, j)
    s2, b = (1, m) if l == s else (-1, l)
    return -2 * s1 * s2 * gen_Ijk(a, b)


def _check_unit(c, s) -> tuple:
    c, s = exact(c), exact(s)
    if c * c + s * s != 1:
        raise ValueError(f"(c, s) = ({c}, {s}) is not on the unit circle")
    return c, s


def one_param(j: int, k: int, c, s) -> LinOp16:
    """cos(t) id + sin(t) I_jk, given exact (c, s) with c^2 + s^2 = 1."""
    c, s = _check_unit(c, s)
    return c * LinOp16.identity() + s * gen_Ijk(j, k)


def spin8_element(j: int, k: int, c, s) -> LinOp16:
    """diag(R_{e_j} R_{conj u}, R_{conj e_j} R_u) with u = c e_j + s e_k."""
    _check_index(j, k, top=7)
    if not j < k:
        raise ValueError("spin8_element needs j < k")
    c, s = _check_unit(c, s)
    u = basis(j) * c + basis(k) * s
    ej = basis(j)
    top = rmul_matrix(ej) @ rmul_matrix(conj(u))
    bottom = rmul_matrix(conj(ej)) @ rmul_matrix(u)
    return LinOp16.blocks(top, None, None, bottom)


def lie_derivative(a: SquareMatrix, phi: ExtForm) -> ExtForm:
    """Infinitesimal action: sum_i phi(v_1, ..., A v_i, ..., v_k)."""
    if len(a) != phi.dim:
        raise ValueError(f"{len(a)}x{len(a)} operator on forms over R^{phi.dim}")
    return derive(a.rows, phi)


def pullback(g: SquareMatrix, phi: ExtForm) -> ExtForm:
    """(g* phi)(v_1, ..., v_k) = phi(g v_1, ..., g v_k)."""
    if len(g) != phi.dim:
        raise ValueError(f"{len(g)}x{len(g)} operator on forms over R^{phi.dim}")
    if not g.det():
        raise ValueError("pullback along a singular map")
    return substitute(g.rows, phi)


def project_80(phi: ExtForm) -> ExtForm:
    """Keep the bidegree (8, 0) part."""
    if phi.dim != 16:
        raise ValueError("projection is defined on forms over O^2")
    return phi.restrict(lambda m: not m & ~X_MASK and m.bit_count() == 8)


@dataclass(frozen=True)
class Omega2:
    ij: tuple[int, int]
    form: ExtForm


@lru_cache(maxsize=None)
def omega_form(i: int, j: int) -> Omega2:
    """Alternating part of (u, v) -> <u, I_ij v>."""
    return Omega2((i, j), ExtForm.from_matrix(gen_Ijk(i, j).rows))


def eq2_form() -> ExtForm:
    """sum_{i,j,k,l=0..8} w_ij ^ w_ik ^ w_jl ^ w_kl over all 9^4 index tuples.

    Grouped by distributivity as sum_{j,k} (sum_i w_ij ^ w_ik) ^ (sum_l w_jl ^ w_kl);
    real forms associate, so no bracketing subtleties arise.
    """
    w = [[omega_form(i, j).form for j in range(9)] for i in range(9)]
    total = ExtForm.zero(16, 8)
    for j in range(9):
        for k in range(9):
            left = ExtForm.zero(16, 4)
            right = ExtForm.zero(16, 4)
            for i in range(9):
                left = left + (w[i][j] ^ w[i][k])
            for l in range(9):
                right = right + (w[j][l] ^ w[k][l])
            total = total + (left ^ right)
    return total


def eq2_ratio(form: ExtForm = None, reference: ExtForm = None) -> Fraction:
    """The single rational lambda with form = lambda * reference.

    Raises ``ArithmeticError`` if the supports differ or the ratios disagree.
    """
    form = eq2_form() if form is None else form
    reference = psi8("eq13").form if reference is None else reference
    if set(form.terms) != set(reference.terms):
        raise ArithmeticError(
            f"supports differ: {len(form.terms)} vs {len(reference.terms)} monomials"
        )
    ratios = {Fraction(form.terms[m]) / Fraction(reference.terms[m]) for m in reference.terms}
    if len(ratios) != 1:
        raise ArithmeticError(f"{len(ratios)} distinct coefficient ratios")
    (lam,) = ratios
    if not lam:
        raise ArithmeticError("zero ratio")
    return lam


def so16_elementary(a: int, b: int) -> LinOp16:
    """E_ab - E_ba, the rotation generator of the (a, b) coordinate plane."""
    rows = [[0] * 16 for _ in range(16)]
    rows[a][b] = 1
    rows[b][a] = -1
    return LinOp16(rows)


def in_spin9_span(a: SquareMatrix) -> bool:
    """Whether ``a`` lies in the real span of the 36 I_jk."""
    gens = [gen_Ijk(j, k).flat() for j, k in spin9_pairs()]
    return rank(gens + [a.flat()]) == rank(gens)
