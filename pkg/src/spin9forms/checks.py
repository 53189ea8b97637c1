"""Named invariant checks grouped into suites, run by ``spin9forms verify``.

A check passes by returning and fails by raising ``AssertionError``; anything
else it raises is reported as an error.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Callable

from . import berger, canon, spin9
from .exterior import ExtForm, det_form, hodge_star
from .octoform import (
    apply_linear,
    coord_dw,
    is_quaternionic,
    obar,
    oreal,
    owedge,
)
from .octonion import (
    LinOp8,
    basis,
    conj,
    inner,
    lmul_matrix,
    mul,
    norm2,
    rmul_matrix,
)
from .sampling import random_octform, random_octonion, random_unit_octonion
from .table3 import EXPECTED_COUNTS, classify_table3

SUITES: dict[str, list["Check"]] = {}


@dataclass(frozen=True)
class Check:
    name: str
    func: Callable[[], None]


def check(suite: str, name: str):
    def register(func):
        SUITES.setdefault(suite, []).append(Check(name, func))
        return func

    return register


def random_rational_nonzero(rng: random.Random) -> Fraction:
    return Fraction(rng.choice((-1, 1)) * rng.randint(1, 9), rng.randint(1, 6))


def _rng(salt: int) -> random.Random:
    return random.Random(20240 + salt)


N_OCT = 1000
N_FORMS = 100


# -- algebra ---------------------------------------------------------------

@check("algebra", "multiplication table: unit, squares, anticommutation")
def _table():
    for j in range(8):
        assert mul(basis(0), basis(j)) == basis(j) == mul(basis(j), basis(0))
    for i in range(1, 8):
        assert mul(basis(i), basis(i)) == -basis(0)
        for j in range(1, 8):
            if i != j:
                assert mul(basis(i), basis(j)) == -mul(basis(j), basis(i))


@check("algebra", "Moufang identities")
def _moufang():
    rng = _rng(1)
    for _ in range(N_OCT):
        u, v, w = (random_octonion(rng) for _ in range(3))
        uvu = mul(mul(u, v), u)
        assert mul(uvu, w) == mul(u, mul(v, mul(u, w)))
        assert mul(w, uvu) == mul(mul(mul(w, u), v), u)
        assert mul(mul(u, v), mul(w, u)) == mul(mul(u, mul(v, w)), u)


@check("algebra", "alternativity")
def _alternative():
    rng = _rng(2)
    for _ in range(N_OCT):
        u, v = random_octonion(rng), random_octonion(rng)
        assert mul(mul(u, u), v) == mul(u, mul(u, v))
        assert mul(mul(u, v), v) == mul(u, mul(v, v))
        assert mul(mul(u, v), u) == mul(u, mul(v, u))


@check("algebra", "norm multiplicativity")
def _norm():
    rng = _rng(3)
    for _ in range(N_OCT):
        u, v = random_octonion(rng), random_octonion(rng)
        assert norm2(mul(u, v)) == norm2(u) * norm2(v)


@check("algebra", "adjoints of R_u and L_u")
def _adjoint():
    rng = _rng(4)
    for _ in range(N_OCT):
        u, v, w = (random_octonion(rng) for _ in range(3))
        assert inner(mul(v, u), w) == inner(v, mul(w, conj(u)))
        assert inner(mul(u, v), w) == inner(v, mul(conj(u), w))


@check("algebra", "R_ubar R_v + R_vbar R_u = 2<u,v> id (and for L)")
def _anticomm():
    rng = _rng(5)
    for _ in range(N_OCT // 10):
        u, v = random_octonion(rng), random_octonion(rng)
        two = 2 * inner(u, v) * LinOp8.identity()
        assert rmul_matrix(conj(u)) @ rmul_matrix(v) + rmul_matrix(conj(v)) @ rmul_matrix(u) == two
        assert lmul_matrix(conj(u)) @ lmul_matrix(v) + lmul_matrix(conj(v)) @ lmul_matrix(u) == two


@check("algebra", "R_u, L_u orthogonal with det +1 for unit u")
def _so8():
    rng = _rng(6)
    for _ in range(20):
        u = random_unit_octonion(rng)
        for m in (rmul_matrix(u), lmul_matrix(u)):
            assert m.is_orthogonal() and m.det() == 1


@check("algebra", "R_e4 R_e5bar R_e6 R_e7bar R_e3 R_e2bar R_e1 R_e0bar (1) = 1")
def _composite():
    order = [(4, False), (5, True), (6, False), (7, True), (3, False), (2, True), (1, False), (0, True)]
    x = basis(0)
    for i, bar in reversed(order):
        e = conj(basis(i)) if bar else basis(i)
        x = mul(x, e)
    assert x == basis(0), x


@check("algebra", "product of the eight basis elements in that order is +-1")
def _eight():
    x = basis(0)
    for i in (4, 5, 6, 7, 3, 2, 1, 0):
        x = mul(x, basis(i))
    assert abs(x[0]) == 1 and x.norm2() == 1


@check("octoform", "real wedge: bilinear, associative, graded commutative")
def _real_wedge():
    from .sampling import random_extform

    rng = _rng(9)
    for _ in range(N_FORMS):
        k, l, m = (rng.randint(1, 3) for _ in range(3))
        a, b, c = (random_extform(rng, 8, d) for d in (k, l, m))
        a2 = random_extform(rng, 8, k)
        t = random_rational_nonzero(rng)
        assert ((a + a2 * t) ^ b) == (a ^ b) + (a2 ^ b) * t
        assert ((a ^ b) ^ c) == (a ^ (b ^ c))
        assert (a ^ b) == (b ^ a) * (-1) ** (k * l)


@check("octoform", "Hodge star preserves the sum of squared coefficients")
def _hodge():
    from .sampling import random_extform

    rng = _rng(8)
    for _ in range(N_FORMS):
        a = random_extform(rng, 8, rng.randint(0, 8), terms=5)
        sq = lambda f: sum(c * c for c in f.terms.values())
        assert sq(hodge_star(a)) == sq(a)


# -- octoform --------------------------------------------------------------

@check("octoform", "conj(a ^ b) = (-1)^(kl) conj(b) ^ conj(a)")
def _barwedge():
    rng = _rng(10)
    for k, l in product((1, 2), repeat=2):
        for _ in range(N_FORMS):
            a, b = random_octform(rng, 6, k), random_octform(rng, 6, l)
            lhs = obar(owedge(a, b))
            rhs = owedge(obar(b), obar(a)) * (-1) ** (k * l)
            assert lhs == rhs


@check("octoform", "Re(u phi ^ conj(v psi)) = <u,v> phi ^ psi")
def _ipwedge():
    rng = _rng(11)
    from .octoform import OctForm
    from .sampling import random_extform

    for k, l in product((1, 2), repeat=2):
        for _ in range(N_FORMS):
            u, v = random_octonion(rng), random_octonion(rng)
            phi, psi = random_extform(rng, 6, k, 2), random_extform(rng, 6, l, 3)
            lhs = oreal(owedge(OctForm.from_real(phi, u), obar(OctForm.from_real(psi, v))))
            assert lhs == (phi ^ psi) * inner(u, v)


@check("octoform", "Re(a ^ conj b) = Re(conj a ^ b)")
def _realab():
    rng = _rng(12)
    for k, l in product((1, 2), repeat=2):
        for _ in range(N_FORMS):
            a, b = random_octform(rng, 6, k), random_octform(rng, 6, l)
            assert oreal(owedge(a, obar(b))) == oreal(owedge(obar(a), b))


@check("octoform", "H-valued forms: closed under wedge and associative")
def _hclosure():
    rng = _rng(13)
    for _ in range(N_FORMS):
        a, b, c = (random_octform(rng, 6, 1, quaternionic=True) for _ in range(3))
        ab = owedge(a, b)
        assert is_quaternionic(ab)
        assert owedge(ab, c) == owedge(a, owedge(b, c))


@check("octoform", "(R_e1 L_e1 + R_e2 L_e2 + R_e4 L_e4) a = -a - 2 conj(a) on H-valued forms")
def _rl_lemma():
    rng = _rng(14)
    op = sum(
        (rmul_matrix(basis(q)) @ lmul_matrix(basis(q)) for q in (2, 4)),
        rmul_matrix(basis(1)) @ lmul_matrix(basis(1)),
    )
    for _ in range(N_FORMS):
        a = random_octform(rng, 6, rng.choice((1, 2)), quaternionic=True)
        assert apply_linear(op, a) == -a - obar(a) * 2


@check("octoform", "dw_i picks out u_i; conj(dw_i) ^ dw_j is H-valued")
def _dw():
    rng = _rng(15)
    n = 2
    dw = [coord_dw(i, n) for i in (1, 2)]
    for _ in range(10):
        u = [random_octonion(rng, (0, 1, 2, 4)) for _ in range(n)]
        vec = [c for ui in u for c in (ui[0], ui[1], ui[2], ui[4])]
        for i in range(n):
            assert dw[i](vec) == u[i]
    for a in dw:
        for b in dw:
            assert is_quaternionic(owedge(obar(a), b))


# -- kraines ---------------------------------------------------------------

@check("kraines", "standard and octonionic Kraines forms agree for n = 1, 2, 3")
def _kraines():
    for n in (1, 2, 3):
        assert canon.kraines_standard(n) == canon.kraines_octonionic(n), n


@check("kraines", "Kaehler form is sum dx^j ^ dy^j and w^n/n! = det for n = 2")
def _kaehler():
    for n in (1, 2, 3):
        expected = ExtForm(2 * n, {(3 << 2 * j): 1 for j in range(n)}, 2)
        assert canon.kaehler(n) == expected
    w = canon.kaehler(2)
    assert (w ^ w) * Fraction(1, 2) == det_form(4)


# -- calibrations ----------------------------------------------------------

@check("calibrations", "Cayley form: 14 terms, coefficients +-1")
def _cayley_terms():
    phi = canon.cayley()
    assert len(phi) == 14 and set(map(abs, phi.terms.values())) == {1}


@check("calibrations", "Cayley form is self-dual under the Hodge star")
def _cayley_dual():
    phi = canon.cayley()
    assert hodge_star(phi) == phi, "hodge_star(cayley()) == -cayley(): anti-self-dual for dx^0..dx^7"


@check("calibrations", "associative form: 7 terms +-1, phi(e_i,e_j,e_k) = eps Re((e_i e_j) e_k)")
def _assoc():
    phi = canon.associative()
    assert len(phi) == 7 and set(map(abs, phi.terms.values())) == {1}
    eps = set()
    for i, j, k in combinations(range(1, 8), 3):
        vecs = [[int(t == a - 1) for t in range(7)] for a in (i, j, k)]
        lhs = phi(*vecs)
        rhs = mul(mul(basis(i), basis(j)), basis(k))[0]
        assert (lhs == 0) == (rhs == 0)
        if rhs:
            eps.add(Fraction(lhs) / rhs)
    assert len(eps) == 1 and eps <= {1, -1}, eps


# -- psi8 ------------------------------------------------------------------

@check("psi8", "Psi40 ^ conj Psi40 = 8! det1 and Psi04 ^ conj Psi04 = 8! det2")
def _det_lemma():
    p = canon.psi_components()
    assert owedge(p.psi40, obar(p.psi40)).to_real() == ExtForm(16, {0x00FF: 40320}, 8)
    assert owedge(p.psi04, obar(p.psi04)).to_real() == ExtForm(16, {0xFF00: 40320}, 8)


@check("psi8", "Re(Psi40 ^ Psi40) = -(3/5) Psi40 ^ conj Psi40")
def _three_fifths():
    p = canon.psi_components()
    assert oreal(owedge(p.psi40, p.psi40)) == ExtForm(16, {0x00FF: Fraction(-3, 5) * 40320}, 8)


@check("psi8", "Psi8 is real with 702 terms; both groupings agree")
def _psi8():
    a, b = canon.psi8("eq13").form, canon.psi8("eq20").form
    assert a == b and len(a) == 702 and a[0x00FF] == 40320


@check("psi8", "five blocks are real, of pure bidegree, swapped by x<->y")
def _blocks():
    blocks = canon.psi_blocks()
    for key, form in blocks.items():
        k, l = int(key[0]), int(key[1])
        assert form and all(canon.bidegree(m) == (k, l) for m in form.terms)
    assert canon.swap_blocks(blocks["62"]) == blocks["26"]
    assert canon.swap_blocks(blocks["44"]) == blocks["44"]
    assert canon.swap_blocks(canon.psi8().form) == canon.psi8().form


@check("psi8", "coefficient table: row counts and coefficients of the scaled form")
def _table3():
    report = classify_table3(canon.scaled_psi8())
    assert report.counts == EXPECTED_COUNTS, report.counts
    assert report.matches_table()


@check("psi8", "F twisted by R_u, R_ubar keeps its real pairings")
def _ru_lemma():
    rng = _rng(20)
    for _ in range(3):
        al = [random_octform(rng, 8, 1, terms=3) for _ in range(8)]
        u = random_unit_octonion(rng)
        ru, rub = rmul_matrix(u), rmul_matrix(conj(u))
        tw1 = [apply_linear(ru, al[0])] + [apply_linear(rub, a) for a in al[1:4]]
        tw2 = [apply_linear(ru, al[4])] + [apply_linear(rub, a) for a in al[5:8]]
        lhs = oreal(owedge(canon.f_op(*tw1), obar(canon.f_op(*tw2))))
        rhs = oreal(owedge(canon.f_op(*al[:4]), obar(canon.f_op(*al[4:]))))
        assert lhs == rhs
        tw3 = [apply_linear(rub, al[4])] + [apply_linear(ru, a) for a in al[5:8]]
        lhs = oreal(owedge(canon.f_op(*tw1), canon.f_op(*tw3)))
        rhs = oreal(owedge(canon.f_op(*al[:4]), canon.f_op(*al[4:])))
        assert lhs == rhs


# -- spin9 -----------------------------------------------------------------

PYTHAGOREAN = ((Fraction(3, 5), Fraction(4, 5)), (Fraction(5, 13), Fraction(12, 13)))


@check("spin9", "I_j^2 = id, I_jk skew with I_jk^2 = -id, I_jk = -I_kj")
def _generators():
    ident = spin9.LinOp16.identity()
    for j in range(9):
        assert spin9.gen_I(j) @ spin9.gen_I(j) == ident
    for j, k in spin9.spin9_pairs():
        m = spin9.gen_Ijk(j, k)
        assert m.is_skew() and m @ m == -ident and spin9.gen_Ijk(k, j) == -m


@check("spin9", "36 generators are linearly independent")
def _rank():
    from .linalg import rank

    assert rank([spin9.gen_Ijk(j, k).flat() for j, k in spin9.spin9_pairs()]) == 36


@check("spin9", "commutators [I_jk, I_lm] (computed signs)")
def _commutators():
    pairs = list(spin9.spin9_pairs())
    for (j, k), (l, m) in product(pairs, repeat=2):
        b = spin9.bracket(spin9.gen_Ijk(j, k), spin9.gen_Ijk(l, m))
        assert b == spin9.expected_bracket(j, k, l, m)


@check("spin9", "all 36 Lie derivatives of Psi8 vanish")
def _lie():
    psi = canon.psi8().form
    for j, k in spin9.spin9_pairs():
        assert not spin9.lie_derivative(spin9.gen_Ijk(j, k), psi), (j, k)


@check("spin9", "a rotation outside spin(9) moves Psi8")
def _witness():
    w = spin9.so16_elementary(0, 8)
    assert not spin9.in_spin9_span(w)
    assert spin9.lie_derivative(w, canon.psi8().form)


@check("spin9", "det form on R^16 is killed by skew operators")
def _det16():
    for j, k in [(0, 8), (1, 2), (3, 7)]:
        assert not spin9.lie_derivative(spin9.gen_Ijk(j, k), det_form(16))


@check("spin9", "one-parameter subgroups fix Psi8")
def _finite():
    psi = canon.psi8().form
    c, s = PYTHAGOREAN[0]
    for j, k in spin9.SAMPLED_PAIRS:
        assert spin9.pullback(spin9.one_param(j, k, c, s), psi) == psi, (j, k)


@check("spin9", "Spin(8) elements equal the one-parameter subgroups and fix each block")
def _spin8():
    c, s = PYTHAGOREAN[0]
    blocks = canon.psi_blocks()
    for j, k in [(0, 1), (2, 5), (3, 7)]:
        g = spin9.spin8_element(j, k, c, s)
        assert g == spin9.one_param(j, k, c, s)
    g = spin9.spin8_element(0, 1, c, s)
    for form in blocks.values():
        assert spin9.pullback(g, form) == form


@check("spin9", "projection identity P(g* Psi_kl) = c^k s^l Psi80")
def _projection():
    blocks = canon.psi_blocks()
    for c, s in PYTHAGOREAN:
        g = spin9.one_param(0, 8, c, s)
        for i, key in enumerate(("80", "62", "44", "26", "08")):
            got = spin9.project_80(spin9.pullback(g, blocks[key]))
            assert got == blocks["80"] * (c ** (8 - 2 * i) * s ** (2 * i)), key


@check("spin9", "binomial weights are forced: kappa = (1,4,6,4,2) is not invariant")
def _kappa():
    g = spin9.one_param(0, 8, *PYTHAGOREAN[0])
    good = canon.psi_kappa(canon.KAPPA)
    bad = canon.psi_kappa((1, 4, 6, 4, 2))
    assert spin9.pullback(g, good) == good
    assert spin9.pullback(g, bad) != bad


@check("spin9", "pullback is multiplicative over wedge")
def _pull_wedge():
    from .sampling import random_extform

    rng = _rng(30)
    g = spin9.one_param(2, 8, *PYTHAGOREAN[1]) @ spin9.one_param(0, 3, *PYTHAGOREAN[0])
    for _ in range(5):
        a, b = random_extform(rng, 16, 2, 3), random_extform(rng, 16, 3, 3)
        assert spin9.pullback(g, a ^ b) == spin9.pullback(g, a) ^ spin9.pullback(g, b)


@check("spin9", "omega_ij quadruple sum is a single rational multiple of Psi8")
def _eq2():
    lam = spin9.eq2_ratio()
    assert lam == spin9.EQ2_RATIO, lam


# -- berger ----------------------------------------------------------------

@check("berger", "line frames are orthonormal")
def _frames():
    import numpy as np

    pts = berger.sample_points(7, 0, 200)
    for p in pts:
        b = berger.line_from_point(p).basis
        assert np.abs(b.T @ b - np.eye(8)).max() < 1e-12


@check("berger", "Monte Carlo average is proportional to Psi8")
def _mc():
    from .mc_report import berger_report

    rep = berger_report(20000, 1)
    assert rep.similarity >= 0.99, rep.similarity
    assert rep.signs_match
    assert rep.zeros_within(3.0)


@check("berger", "standard error shrinks like 1/sqrt(N)")
def _convergence():
    import numpy as np

    mons = [0x00FF, 0xFF00]
    ratios = []
    for seed in (11, 12, 13):
        a = berger.monte_carlo(4000, seed, mons).stderr
        b = berger.monte_carlo(8000, seed, mons).stderr
        ratios.extend(b / a)
    assert abs(np.mean(ratios) - 2 ** -0.5) < 0.05, ratios


ALL_SUITES = ("algebra", "octoform", "kraines", "calibrations", "psi8", "spin9", "berger")


def run_suite(name: str, emit=print) -> bool:
    names = ALL_SUITES if name == "all" else (name,)
    ok = True
    for suite in names:
        for c in SUITES[suite]:
            try:
                c.func()
            except AssertionError as exc:
                ok = False
                emit(f"FAIL [{suite}] {c.name}" + (f": {exc}" if str(exc) else ""))
            except Exception as exc:  # noqa: BLE001 - report and keep going
                ok = False
                emit(f"ERROR [{suite}] {c.name}: {type(exc).__name__}: {exc}")
            else:
                emit(f"PASS [{suite}] {c.name}")
    return ok
