from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from spin9forms.octonion import (
    MULT,
    TRIPLES,
    LinOp8,
    Octonion,
    basis,
    build_mult_table,
    conj,
    index_product,
    inner,
    lmul_matrix,
    mul,
    norm2,
    real_part,
    rmul_matrix,
)
from spin9forms.sampling import random_unit_octonion

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
octonions = st.lists(rationals, min_size=8, max_size=8).map(Octonion)


def test_triples_follow_cyclic_rule():
    assert set(TRIPLES) == {(1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 7), (5, 6, 1), (6, 7, 2), (7, 1, 3)}


def test_table_examples():
    assert MULT[1, 2] == (1, 4)
    assert MULT[7, 2] == (1, 6)
    assert MULT[2, 6] == (1, 7)
    for j in range(8):
        assert MULT[j, 0] == (1, j) == MULT[0, j]
    for j in range(1, 8):
        assert MULT[j, j] == (-1, 0)


def test_cyclic_triples_multiply():
    for a, b, c in TRIPLES:
        assert mul(basis(a), basis(b)) == basis(c)
        assert mul(basis(b), basis(c)) == basis(a)
        assert mul(basis(c), basis(a)) == basis(b)
        assert mul(basis(b), basis(a)) == -basis(c)


def test_inconsistent_triples_rejected():
    bad = list(TRIPLES)
    bad[0] = (1, 2, 5)
    with pytest.raises(ValueError):
        build_mult_table(bad)


def test_real_part_and_inner():
    assert real_part(basis(0)) == 1
    assert real_part(basis(3)) == 0
    assert real_part(Octonion([Fraction(3, 2), 0, 5, 0, 0, 0, 0, 0])) == Fraction(3, 2)
    for i in range(8):
        for j in range(8):
            assert inner(basis(i), basis(j)) == (i == j)


def test_inverse_and_division():
    u = Octonion([1, 2, 0, -1, 0, 3, 0, 1])
    assert mul(u, u.inverse()) == basis(0)
    assert (u / 2) * 2 == u
    with pytest.raises(ZeroDivisionError):
        Octonion().inverse()


def test_immutable():
    with pytest.raises(AttributeError):
        basis(1).coords = (0,) * 8


def test_matrices_act_as_products():
    u = Octonion([1, 0, 2, 0, -1, 0, 0, 3])
    x = Octonion([0, 1, 1, 0, 0, 2, 0, -1])
    assert rmul_matrix(u)(x) == mul(x, u)
    assert lmul_matrix(u)(x) == mul(u, x)
    assert rmul_matrix(basis(0)) == LinOp8.identity()


def test_composite_of_right_multiplications():
    ops = [rmul_matrix(basis(4)), rmul_matrix(conj(basis(5))), rmul_matrix(basis(6)),
           rmul_matrix(conj(basis(7))), rmul_matrix(basis(3)), rmul_matrix(conj(basis(2))),
           rmul_matrix(basis(1)), rmul_matrix(conj(basis(0)))]
    x = basis(0)
    for op in reversed(ops):
        x = op(x)
    assert x == basis(0)


def test_index_product():
    assert index_product(1, 2) == 4
    assert index_product(1, 2, 4) == 0
    assert index_product(1, 2, 3) != 0


def test_unit_multiplications_in_so8():
    import random

    rng = random.Random(5)
    for _ in range(5):
        u = random_unit_octonion(rng)
        assert norm2(u) == 1
        assert rmul_matrix(u).is_orthogonal() and rmul_matrix(u).det() == 1
        assert lmul_matrix(u).is_orthogonal() and lmul_matrix(u).det() == 1


@settings(max_examples=60, deadline=None)
@given(octonions, octonions, octonions)
def test_moufang(u, v, w):
    uvu = mul(mul(u, v), u)
    assert mul(uvu, w) == mul(u, mul(v, mul(u, w)))
    assert mul(w, uvu) == mul(mul(mul(w, u), v), u)
    assert mul(mul(u, v), mul(w, u)) == mul(u, mul(mul(v, w), u))


@settings(max_examples=60, deadline=None)
@given(octonions, octonions)
def test_alternative_and_normed(u, v):
    assert mul(mul(u, u), v) == mul(u, mul(u, v))
    assert mul(mul(u, v), v) == mul(u, mul(v, v))
    assert norm2(mul(u, v)) == norm2(u) * norm2(v)
    assert conj(mul(u, v)) == mul(conj(v), conj(u))
    assert inner(u, v) == real_part(mul(u, conj(v)))


@settings(max_examples=40, deadline=None)
@given(octonions, octonions, octonions)
def test_adjoint_relations(u, v, w):
    assert inner(mul(v, u), w) == inner(v, mul(w, conj(u)))
    assert inner(mul(u, v), w) == inner(v, mul(conj(u), w))


@settings(max_examples=20, deadline=None)
@given(octonions, octonions)
def test_composition_relation(u, v):
    lhs = rmul_matrix(conj(u)) @ rmul_matrix(v) + rmul_matrix(conj(v)) @ rmul_matrix(u)
    assert lhs == 2 * inner(u, v) * LinOp8.identity()


def test_not_associative():
    assert mul(mul(basis(1), basis(2)), basis(3)) == -mul(basis(1), mul(basis(2), basis(3)))
