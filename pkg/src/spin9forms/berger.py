"""Monte Carlo average of octonionic-line volume forms over OP^1.

Uniform points on S^15 are pushed to the line through them; each line L_a,
a = u1^{-1} u2, carries the orthonormal frame b_i = (e_i, e_i a) / sqrt(1 + |a|^2),
and the coefficient of pi_L^* nu_L on a basis 8-monomial is the 8x8 minor of
that frame. Floating point lives here only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .exterior import indices_of
from .octonion import MULT

__all__ = [
    "OctLine",
    "STRUCTURE",
    "omul",
    "line_from_point",
    "line_pullback_coeff",
    "sample_points",
    "MCResult",
    "monte_carlo",
    "cosine_similarity",
]

# STRUCTURE[i, j, k] = coefficient of e_k in e_i e_j
STRUCTURE = np.zeros((8, 8, 8))
for _i in range(8):
    for _j in range(8):
        _s, _k = MULT[_i, _j]
        STRUCTURE[_i, _j, _k] = _s

_CONJ = np.array([1.0] + [-1.0] * 7)
INFINITY = None


def omul(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Float octonion product, broadcasting over leading axes."""
    return np.einsum("...i,...j,ijk->...k", u, v, STRUCTURE)


def _rmul(a: np.ndarray) -> np.ndarray:
    # matrix of x -> x a; column i is e_i a
    return np.einsum("...j,ijk->...ki", a, STRUCTURE)


@dataclass(frozen=True)
class OctLine:
    """Octonionic line L_a; ``a is None`` marks L_infinity."""

    a: np.ndarray | None
    basis: np.ndarray

    @classmethod
    def from_param(cls, a) -> "OctLine":
        if a is None:
            frame = np.vstack([np.zeros((8, 8)), np.eye(8)])
            return cls(None, frame)
        a = np.asarray(a, dtype=float)
        frame = np.vstack([np.eye(8), _rmul(a)]) / math.sqrt(1.0 + a @ a)
        return cls(a, frame)

    @property
    def is_infinite(self) -> bool:
        return self.a is None


def line_from_point(p: Sequence[float], tol: float = 1e-12) -> OctLine:
    """Line through a unit vector p = (u1, u2) of O^2, with a = u1^{-1} u2."""
    p = np.asarray(p, dtype=float)
    if p.shape != (16,):
        raise ValueError("expected a vector in R^16")
    u1, u2 = p[:8], p[8:]
    n1 = u1 @ u1
    if n1 <= tol * tol:
        return OctLine.from_param(INFINITY)
    a = omul(u1 * _CONJ, u2) / n1
    return OctLine.from_param(a)


def line_pullback_coeff(line: OctLine, mask: int) -> float:
    rows = indices_of(mask)
    if len(rows) != 8:
        raise ValueError("monomial must have degree 8")
    return float(np.linalg.det(line.basis[list(rows), :]))


def sample_points(seed: int, start: int, stop: int) -> np.ndarray:
    """Uniform points on S^15, one independent stream per sample index."""
    out = np.empty((stop - start, 16))
    for n in range(start, stop):
        rng = np.random.default_rng(np.random.SeedSequence([seed, n]))
        g = rng.standard_normal(16)
        out[n - start] = g / np.linalg.norm(g)
    return out


@dataclass
class MCResult:
    monomials: list[int]
    mean: np.ndarray
    stderr: np.ndarray
    samples: int
    seed: int


def _frames(points: np.ndarray) -> np.ndarray:
    u1, u2 = points[:, :8], points[:, 8:]
    n1 = np.einsum("ni,ni->n", u1, u1)
    a = omul(u1 * _CONJ, u2) / n1[:, None]
    scale = 1.0 / np.sqrt(1.0 + np.einsum("ni,ni->n", a, a))
    eye = np.broadcast_to(np.eye(8), (len(points), 8, 8))
    return np.concatenate([eye, _rmul(a)], axis=1) * scale[:, None, None]


def monte_carlo(samples: int, seed: int, monomials: Sequence[int], chunk: int = 4096) -> MCResult:
    """Per-monomial mean and standard error of pi_L^* nu_L over random lines.

    Results depend only on (samples, seed): sample n always uses the stream
    SeedSequence([seed, n]) and chunks are reduced in index order.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    monomials = list(monomials)
    if not monomials or len(set(monomials)) != len(monomials):
        raise ValueError("monomial set must be nonempty and free of duplicates")
    rows = np.array([indices_of(m) for m in monomials])
    if rows.shape[1:] != (8,):
        raise ValueError("all monomials must have degree 8")
    total = np.zeros(len(monomials))
    total_sq = np.zeros(len(monomials))
    for start in range(0, samples, chunk):
        stop = min(samples, start + chunk)
        frames = _frames(sample_points(seed, start, stop))
        minors = frames[:, rows, :]  # (n, monomials, 8, 8)
        d = np.linalg.det(minors)
        total += d.sum(axis=0)
        total_sq += (d * d).sum(axis=0)
    mean = total / samples
    if samples > 1:
        var = np.maximum(total_sq / samples - mean * mean, 0.0) * samples / (samples - 1)
        stderr = np.sqrt(var / samples)
    else:
        stderr = np.full(len(monomials), np.inf)
    return MCResult(monomials, mean, stderr, samples, seed)


def cosine_similarity(a: Sequence[float], b: Sequence[float]) -> float:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return float(a @ b / (np.linalg.norm(a) * np.linalg.norm(b)))
