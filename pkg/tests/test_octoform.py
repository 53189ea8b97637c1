import random
from itertools import product

import pytest

from spin9forms.exterior import ExtForm
from spin9forms.octoform import (
    NotRealError,
    OctForm,
    apply_linear,
    coord_dw,
    coord_dx,
    coord_dy,
    is_quaternionic,
    obar,
    oreal,
    owedge,
)
from spin9forms.octonion import LinOp8, Octonion, basis, conj, inner, mul, rmul_matrix
from spin9forms.sampling import random_extform, random_octform, random_octonion


def test_wedge_multiplies_coefficients():
    phi, psi = ExtForm.basis(4, [0]), ExtForm.basis(4, [1])
    a = OctForm.from_real(phi, basis(1))
    b = OctForm.from_real(psi, basis(2))
    assert owedge(a, b) == OctForm.from_real(phi ^ psi, basis(4))
    assert (a ^ b) == owedge(a, b)


def test_wedge_not_associative():
    f = [OctForm.from_real(ExtForm.basis(3, [i]), basis(i + 1)) for i in range(3)]
    left = owedge(owedge(f[0], f[1]), f[2])
    right = owedge(f[0], owedge(f[1], f[2]))
    assert left == -right and left


def test_coordinate_forms_evaluate_to_coordinates():
    dx, dy = coord_dx(), coord_dy()
    v = list(range(1, 17))
    assert dx(v) == Octonion(v[:8])
    assert dy(v) == Octonion(v[8:])
    assert len(dx) == 8 and dx.degree == 1


def test_dx_wedge_dx_bar_is_imaginary():
    dx = coord_dx(8)
    sq = owedge(dx, obar(dx))
    assert not oreal(sq)
    with pytest.raises(NotRealError):
        sq.to_real()


def test_coord_dw():
    dw = coord_dw(2, 3)
    assert dw.dim == 12
    assert set(dw.terms) == {1 << 4, 1 << 5, 1 << 6, 1 << 7}
    assert is_quaternionic(dw)
    with pytest.raises(IndexError):
        coord_dw(0, 2)
    assert not is_quaternionic(coord_dx(8))


def test_component_and_real():
    u = Octonion([1, 2, 0, 0, 0, 0, 0, 3])
    f = OctForm.from_real(ExtForm.basis(4, [0, 2]), u)
    assert f.component(7) == ExtForm.basis(4, [0, 2]) * 3
    assert oreal(f) == f.component(0)
    assert not f.is_real() and OctForm.from_real(ExtForm.basis(4, [1])).is_real()


def test_apply_linear_accepts_callables():
    f = random_octform(random.Random(0), 5, 2)
    assert apply_linear(LinOp8.identity(), f) == f
    assert apply_linear(conj, f) == obar(f)
    with pytest.raises(TypeError):
        apply_linear(3, f)


def test_mixed_degree_rejected():
    with pytest.raises(ValueError):
        OctForm(4, {1: basis(0), 3: basis(1)})


@pytest.mark.parametrize("k,l", list(product((1, 2), repeat=2)))
def test_bar_reverses_wedge(k, l):
    rng = random.Random(10 * k + l)
    for _ in range(25):
        a, b = random_octform(rng, 6, k), random_octform(rng, 6, l)
        assert obar(owedge(a, b)) == owedge(obar(b), obar(a)) * (-1) ** (k * l)


@pytest.mark.parametrize("k,l", list(product((1, 2), repeat=2)))
def test_real_part_identities(k, l):
    rng = random.Random(100 + 10 * k + l)
    for _ in range(25):
        u, v = random_octonion(rng), random_octonion(rng)
        phi, psi = random_extform(rng, 6, k, 2), random_extform(rng, 6, l, 2)
        lhs = oreal(owedge(OctForm.from_real(phi, u), obar(OctForm.from_real(psi, v))))
        assert lhs == (phi ^ psi) * inner(u, v)
        a, b = random_octform(rng, 6, k), random_octform(rng, 6, l)
        assert oreal(owedge(a, obar(b))) == oreal(owedge(obar(a), b))


def test_composition_relation_on_forms():
    rng = random.Random(7)
    for _ in range(10):
        u, v = random_octonion(rng), random_octonion(rng)
        op = rmul_matrix(conj(u)) @ rmul_matrix(v) + rmul_matrix(conj(v)) @ rmul_matrix(u)
        a = random_octform(rng, 5, 2)
        assert apply_linear(op, a) == a * (2 * inner(u, v))


def test_quaternionic_forms_associate():
    rng = random.Random(3)
    for _ in range(30):
        a, b, c = (random_octform(rng, 6, rng.choice((1, 2)), quaternionic=True) for _ in range(3))
        if a.degree + b.degree + c.degree > 6:
            continue
        assert is_quaternionic(owedge(a, b))
        assert owedge(owedge(a, b), c) == owedge(a, owedge(b, c))


def test_quaternion_rl_identity():
    from spin9forms.octonion import lmul_matrix

    op = sum((rmul_matrix(basis(q)) @ lmul_matrix(basis(q)) for q in (2, 4)),
             rmul_matrix(basis(1)) @ lmul_matrix(basis(1)))
    rng = random.Random(4)
    for _ in range(30):
        a = random_octform(rng, 6, 2, quaternionic=True)
        assert apply_linear(op, a) == -a - obar(a) * 2


def test_evaluation_of_wedge():
    dx = coord_dx(8)
    e = [[int(i == j) for i in range(8)] for j in range(8)]
    # (dx ^ dx)(e_1, e_2) = e1 e2 - e2 e1 = 2 e4
    assert owedge(dx, dx)(e[1], e[2]) == basis(4) * 2
    assert owedge(dx, dx)(e[1], e[2]) == mul(basis(1), basis(2)) - mul(basis(2), basis(1))
