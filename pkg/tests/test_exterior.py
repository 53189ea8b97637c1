from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from spin9forms.exterior import (
    ExtForm,
    all_masks,
    basis_sign,
    derive,
    det_form,
    hodge_star,
    indices_of,
    mask_of,
    substitute,
    wedge,
)

DIM = 7


@st.composite
def forms(draw, degree=None):
    k = draw(st.integers(0, 3)) if degree is None else degree
    masks = draw(st.lists(st.sampled_from(all_masks(DIM, k)), max_size=4, unique=True))
    coeffs = draw(st.lists(st.fractions(-5, 5, max_denominator=4), min_size=len(masks), max_size=len(masks)))
    return ExtForm(DIM, dict(zip(masks, coeffs)), k)


def dx(i, dim=DIM):
    return ExtForm.basis(dim, [i])


def test_basis_sign_examples():
    assert basis_sign(mask_of([0]), mask_of([1])) == 1
    assert basis_sign(mask_of([1, 3]), mask_of([2])) == -1
    assert basis_sign(mask_of([0]), mask_of([0])) == 0


def test_mask_round_trip():
    assert indices_of(mask_of([5, 0, 9])) == (0, 5, 9)
    with pytest.raises(ValueError):
        mask_of([1, 1])


def test_wedge_examples():
    assert (dx(0) ^ dx(1)) == ExtForm(DIM, {0b11: 1}, 2)
    assert (dx(1) ^ dx(0)) == ExtForm(DIM, {0b11: -1}, 2)
    phi = dx(0) + dx(2) * 3
    assert not (phi ^ phi)
    a, b = dx(0) ^ dx(1), dx(2) ^ dx(3)
    assert (a ^ b) == (b ^ a)
    assert wedge(a, b) == (a ^ b)


def test_degree_overflow_is_zero():
    top = det_form(DIM)
    out = top ^ dx(0)
    assert not out and out.degree == DIM + 1


def test_mixed_degrees_rejected():
    with pytest.raises(ValueError):
        ExtForm(DIM, {0b1: 1, 0b11: 1})


def test_zero_coefficients_dropped():
    f = ExtForm(DIM, {0b1: 0, 0b10: Fraction(2, 2)})
    assert len(f) == 1 and type(f[0b10]) is int
    assert (f - f) == 0


def test_basis_permutation_sign():
    assert ExtForm.basis(DIM, [2, 0, 1]) == ExtForm.basis(DIM, [0, 1, 2])
    assert ExtForm.basis(DIM, [1, 0, 2]) == -ExtForm.basis(DIM, [0, 1, 2])


def test_from_matrix_alternating_part():
    m = [[1, 2, 0], [0, 0, 3], [1, 0, 0]]
    f = ExtForm.from_matrix(m)
    assert f[(0, 1)] == 1 and f[(1, 2)] == Fraction(3, 2) and f[(0, 2)] == Fraction(-1, 2)


def test_evaluation_is_determinant():
    f = ExtForm.basis(3, [0, 1])
    assert f((1, 0, 0), (0, 1, 0)) == 1
    assert f((0, 1, 0), (1, 0, 0)) == -1
    assert det_form(3)((1, 2, 0), (0, 1, 0), (5, 5, 2)) == 2
    with pytest.raises(ValueError):
        f((1, 0, 0),)


def test_hodge_star_on_r8():
    e0 = ExtForm.basis(8, [0])
    assert hodge_star(e0) == ExtForm.basis(8, range(1, 8))
    assert hodge_star(ExtForm.basis(8, [1])) == -ExtForm.basis(8, [0, 2, 3, 4, 5, 6, 7])
    assert hodge_star(det_form(8)) == ExtForm(8, {0: 1}, 0)
    f = ExtForm.basis(8, [0, 1, 2, 3]) + ExtForm.basis(8, [4, 5, 6, 7])
    assert hodge_star(f) == f


def test_substitute_identity_and_swap():
    ident = [[int(i == j) for j in range(DIM)] for i in range(DIM)]
    f = dx(0) ^ dx(3)
    assert substitute(ident, f) == f
    swap = [row[:] for row in ident]
    swap[0], swap[3] = ident[3], ident[0]
    assert substitute(swap, f) == -f


def test_derive_matches_first_order_pullback():
    # d/dt substitute(I + tA) at t = 0 equals derive(A)
    a = [[0] * DIM for _ in range(DIM)]
    a[0][1], a[1][0], a[2][4] = 1, -1, 3
    f = (dx(0) ^ dx(2)) + (dx(1) ^ dx(4)) * 2
    t = Fraction(1, 1000)
    g = [[int(i == j) + t * a[i][j] for j in range(DIM)] for i in range(DIM)]
    second = substitute(g, f) - f - derive(a, f) * t
    assert all(abs(c) <= 10 * t * t for c in second.terms.values())


@settings(max_examples=50, deadline=None)
@given(forms(), forms(), forms())
def test_associative(a, b, c):
    assert ((a ^ b) ^ c) == (a ^ (b ^ c))


@settings(max_examples=50, deadline=None)
@given(forms(), forms(), st.fractions(-3, 3, max_denominator=3))
def test_graded_commutative_and_bilinear(a, b, t):
    assert (a ^ b) == (b ^ a) * (-1) ** (a.degree * b.degree)
    b2 = ExtForm(DIM, {m: c + 1 for m, c in b.terms.items()}, b.degree)
    assert (a ^ (b + b2 * t)) == (a ^ b) + (a ^ b2) * t


@settings(max_examples=50, deadline=None)
@given(forms())
def test_hodge_isometry(a):
    sq = lambda f: sum(c * c for c in f.terms.values())
    assert sq(hodge_star(a)) == sq(a)
    assert hodge_star(hodge_star(a)) == a * (-1) ** (a.degree * (DIM - a.degree))


@settings(max_examples=30, deadline=None)
@given(forms(1), forms(2))
def test_substitute_is_multiplicative(a, b):
    g = [[(i * 3 + j * 5) % 4 - 1 for j in range(DIM)] for i in range(DIM)]
    assert substitute(g, a ^ b) == substitute(g, a) ^ substitute(g, b)
