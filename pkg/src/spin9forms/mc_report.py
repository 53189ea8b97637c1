"""Comparison of the Monte Carlo line average with the exact invariant 8-form."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .berger import MCResult, cosine_similarity, monte_carlo
from .canon import X_MASK, psi8, scaled_psi8
from .exterior import all_masks
from .formats import format_monomial
from .table3 import classify_table3

N_ZERO_MONOMIALS = 5


@lru_cache(maxsize=None)
def default_monomials() -> tuple[int, ...]:
    """One representative per coefficient-table row, then the first few monomials absent from the form."""
    reps = classify_table3(scaled_psi8()).representatives()
    support = psi8().form.terms
    zeros = [m for m in all_masks(16, 8) if m not in support][:N_ZERO_MONOMIALS]
    return tuple(reps + zeros)


@dataclass
class BergerReport:
    result: MCResult
    exact: np.ndarray  # psi8 coefficients on the same monomials
    sign: float  # global sign fixed by the x-block monomial

    @property
    def nonzero(self) -> np.ndarray:
        return self.exact != 0

    @property
    def similarity(self) -> float:
        """Cosine between sign-fixed MC means and psi8 on the nonzero monomials."""
        nz = self.nonzero
        return cosine_similarity(self.sign * self.result.mean[nz], self.exact[nz])

    @property
    def constant(self) -> float:
        """Least-squares c with MC mean ~ c * psi8."""
        nz = self.nonzero
        e = self.exact[nz]
        return float(self.result.mean[nz] @ e / (e @ e))

    @property
    def signs_match(self) -> bool:
        nz = self.nonzero
        return bool(np.all(np.sign(self.sign * self.result.mean[nz]) == np.sign(self.exact[nz])))

    def zscores(self) -> np.ndarray:
        """|mean| / stderr on the monomials where psi8 vanishes."""
        z = ~self.nonzero
        return np.abs(self.result.mean[z]) / self.result.stderr[z]

    def zeros_within(self, sigmas: float) -> bool:
        return bool(np.all(self.zscores() <= sigmas))

    def render(self) -> str:
        r = self.result
        lines = [
            f"samples {r.samples}",
            f"seed {r.seed}",
            f"{'monomial':<40} {'mean':>14} {'stderr':>12} {'psi8':>7}",
        ]
        for m, mu, se, ex in zip(r.monomials, r.mean, r.stderr, self.exact):
            lines.append(f"{format_monomial(m):<40} {mu:>14.6e} {se:>12.4e} {int(ex):>7d}")
        lines.append(f"constant {self.constant:.6e}")
        lines.append(f"similarity {self.similarity:.6f}")
        return "\n".join(lines) + "\n"


def berger_report(samples: int, seed: int, monomials=None) -> BergerReport:
    monomials = list(default_monomials() if monomials is None else monomials)
    result = monte_carlo(samples, seed, monomials)
    table = psi8().form.terms
    exact = np.array([float(table.get(m, 0)) for m in monomials])
    x_block = [i for i, m in enumerate(monomials) if m == X_MASK]
    if x_block:
        sign = 1.0 if result.mean[x_block[0]] * exact[x_block[0]] >= 0 else -1.0
    else:
        sign = 1.0 if result.mean @ exact >= 0 else -1.0
    return BergerReport(result, exact, sign)
