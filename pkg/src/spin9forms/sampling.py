"""Seeded random exact test data: rational octonions, unit octonions, forms."""

from __future__ import annotations

import random
from fractions import Fraction

from .octoform import QUATERNION_UNITS, OctForm
from .exterior import ExtForm, all_masks
from .octonion import Octonion


def random_rational(rng: random.Random, size: int = 9, den: int = 6) -> Fraction:
    return Fraction(rng.randint(-size, size), rng.randint(1, den))


def random_octonion(rng: random.Random, support=range(8), **kw) -> Octonion:
    c = [0] * 8
    for i in support:
        c[i] = random_rational(rng, **kw)
    return Octonion(c)


def random_unit_octonion(rng: random.Random) -> Octonion:
    """Rational point of S^7 via inverse stereographic projection."""
    while True:
        t = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(7)]
        n = sum(x * x for x in t)
        if n:
            break
    return Octonion([(n - 1) / (n + 1)] + [2 * x / (n + 1) for x in t])


def random_extform(rng: random.Random, dim: int, degree: int, terms: int = 4) -> ExtForm:
    masks = rng.sample(all_masks(dim, degree), min(terms, len(all_masks(dim, degree))))
    return ExtForm(dim, {m: random_rational(rng) for m in masks}, degree)


def random_octform(
    rng: random.Random, dim: int, degree: int, terms: int = 3, quaternionic: bool = False
) -> OctForm:
    support = QUATERNION_UNITS if quaternionic else range(8)
    masks = rng.sample(all_masks(dim, degree), min(terms, len(all_masks(dim, degree))))
    return OctForm(dim, {m: random_octonion(rng, support) for m in masks}, degree)
