"""Classification of the monomials of the scaled invariant 8-form into the
eleven classes of its standard-basis table."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .exterior import ExtForm, indices_of
from .octonion import index_product

__all__ = ["Table3Row", "Table3Report", "ROWS", "EXPECTED_COUNTS", "classify_monomial", "classify_table3"]


@dataclass(frozen=True)
class RowSpec:
    row: int
    coefficient: str
    pattern: str
    specification: str
    count: int


ROWS: tuple[RowSpec, ...] = (
    RowSpec(1, "-14", "dx^0...dx^7", "-", 1),
    RowSpec(2, "+-2", "dx^i0...dx^i5 dy^i6 dy^i7", "i0<...<i5; i6<i7", 28),
    RowSpec(3, "+-2", "dx^i0...dx^i5 dy^i4 dy^i5", "i0<...<i3; i4<i5; i0i1i2i3=0", 84),
    RowSpec(4, "+-2", "dx^i0...dx^i3 dy^i4...dy^i7", "i0<...<i3; i4<...<i7; i0i1i2i3=0", 14),
    RowSpec(5, "+-1", "dx^i0...dx^i3 dy^i4...dy^i7", "i0<...<i3; i4<...<i7; i0i1i2i3!=0", 56),
    RowSpec(
        6,
        "+-1",
        "dx^i0...dx^i3 dy^i2...dy^i5",
        "i0<i1; i2<i3; i0i1i2i3!=0; i4=i0i2i3; i5=i1i2i3",
        336,
    ),
    RowSpec(7, "+-1", "dx^i0...dx^i3 dy^i0...dy^i3", "i0<...<i3; i0i1i2i3!=0", 56),
    RowSpec(8, "+-2", "dx^i0...dx^i3 dy^i0...dy^i3", "i0<...<i3; i0i1i2i3=0", 14),
    RowSpec(9, "+-2", "dx^i0 dx^i1 dy^i0...dy^i5", "i0<i1; i2<...<i5; i2i3i4i5=0", 84),
    RowSpec(10, "+-2", "dx^i0 dx^i1 dy^i2...dy^i7", "i0<i1; i2<...<i7", 28),
    RowSpec(11, "-14", "dy^0...dy^7", "-", 1),
)

EXPECTED_COUNTS = tuple(r.count for r in ROWS)


def _unit(indices) -> bool:
    # e_{i0} e_{i1} ... = +-1
    return index_product(*indices) == 0


def classify_monomial(mask: int) -> int:
    """Row number (1..11) of a degree-8 monomial on O^2.

    Raises ``ValueError`` if the monomial fits none of the rows.
    """
    xs = frozenset(indices_of(mask & 0xFF))
    ys = frozenset(indices_of(mask >> 8))
    k, l = len(xs), len(ys)
    both = xs & ys
    if (k, l) == (8, 0):
        return 1
    if (k, l) == (0, 8):
        return 11
    if (k, l) == (6, 2):
        if not both:
            return 2
        if ys <= xs and _unit(xs - ys):
            return 3
    elif (k, l) == (2, 6):
        if not both:
            return 10
        if xs <= ys and _unit(ys - xs):
            return 9
    elif (k, l) == (4, 4):
        if not both:
            return 4 if _unit(xs) else 5
        if xs == ys:
            return 8 if _unit(xs) else 7
        if len(both) == 2 and not _unit(xs):
            i0, i1 = sorted(xs - both)
            i2, i3 = sorted(both)
            if ys - both == {index_product(i0, i2, i3), index_product(i1, i2, i3)}:
                return 6
    raise ValueError(f"monomial x{sorted(xs)} y{sorted(ys)} fits no row")


@dataclass
class Table3Row:
    spec: RowSpec
    count: int = 0
    coefficients: Counter = field(default_factory=Counter)

    @property
    def row(self) -> int:
        return self.spec.row

    def observed(self) -> str:
        mags = {abs(c) for c in self.coefficients}
        signs = {c > 0 for c in self.coefficients}
        if len(mags) != 1:
            return "mixed"
        (mag,) = mags
        if signs == {True, False}:
            return f"+-{mag}"
        return f"{'' if True in signs else '-'}{mag}"

    def conforms(self) -> bool:
        """Coefficients agree with the row's label; "+-c" allows either sign per monomial."""
        label = self.spec.coefficient
        if label.startswith("+-"):
            allowed = {int(label[2:]), -int(label[2:])}
        else:
            allowed = {int(label)}
        return bool(self.coefficients) and set(self.coefficients) <= allowed


@dataclass
class Table3Report:
    rows: list[Table3Row]
    members: dict[int, int]

    @property
    def total(self) -> int:
        return sum(r.count for r in self.rows)

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(r.count for r in self.rows)

    def representatives(self) -> list[int]:
        """Smallest mask of each row."""
        reps = {}
        for m, r in self.members.items():
            if r not in reps or m < reps[r]:
                reps[r] = m
        return [reps[r.row] for r in self.rows if r.row in reps]

    def matches_table(self) -> bool:
        return self.counts == EXPECTED_COUNTS and all(r.conforms() for r in self.rows)


def classify_table3(phi: ExtForm) -> Table3Report:
    if phi.dim != 16 or phi.degree != 8:
        raise ValueError("expected an 8-form on O^2")
    rows = [Table3Row(spec) for spec in ROWS]
    members = {}
    for m, c in phi.terms.items():
        r = classify_monomial(m)
        members[m] = r
        rows[r - 1].count += 1
        rows[r - 1].coefficients[c] += 1
    return Table3Report(rows, members)
