import pytest

from spin9forms import canon
from spin9forms.exterior import ExtForm, mask_of
from spin9forms.table3 import EXPECTED_COUNTS, ROWS, classify_monomial, classify_table3


def test_expected_counts():
    assert EXPECTED_COUNTS == (1, 28, 84, 14, 56, 336, 56, 14, 84, 28, 1)
    assert sum(EXPECTED_COUNTS) == 702
    assert [r.row for r in ROWS] == list(range(1, 12))


def test_classify_examples():
    assert classify_monomial(0x00FF) == 1
    assert classify_monomial(0xFF00) == 11
    # x0..x5 with y6 y7: disjoint indices
    assert classify_monomial(mask_of([0, 1, 2, 3, 4, 5, 14, 15])) == 2
    # dx^1 dx^2 dx^4 is a quaternionic triple; x{0,1,2,4} with y{0,1,2,4}
    assert classify_monomial(mask_of([0, 1, 2, 4, 8, 9, 10, 12])) == 8
    assert classify_monomial(mask_of([0, 1, 2, 3, 8, 9, 10, 11])) == 7


def test_unclassifiable():
    with pytest.raises(ValueError):
        classify_monomial(mask_of([0, 1, 2, 3, 4, 5, 6, 8]))


def test_report_on_scaled_form():
    rep = classify_table3(canon.scaled_psi8())
    assert rep.total == 702
    assert rep.counts == EXPECTED_COUNTS
    assert rep.matches_table()
    observed = [r.observed() for r in rep.rows]
    assert observed[0] == observed[-1] == "-14"
    assert observed[6] == "-1" and observed[7] == "-2"
    assert all(o.lstrip("+-") in {"1", "2", "14"} for o in observed)
    assert len(rep.representatives()) == 11
    assert rep.representatives()[0] == 0x00FF


def test_report_flags_wrong_coefficient():
    phi = canon.scaled_psi8()
    bad = phi + ExtForm(16, {0x00FF: 1}, 8)
    assert not classify_table3(bad).matches_table()


def test_wrong_shape_rejected():
    with pytest.raises(ValueError):
        classify_table3(ExtForm.basis(16, [0]))
