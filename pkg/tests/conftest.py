"""Shared randomized-input helpers for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np
import pytest

from linksig.laurent import LaurentPoly
from linksig.torus import TorusPoint


def random_poly(rng: random.Random, mu: int, max_terms: int = 4,
                exp_range: tuple[int, int] = (-3, 3),
                coeff_range: tuple[int, int] = (-9, 9),
                half_step: bool = False, nonzero: bool = False) -> LaurentPoly:
    terms = {}
    for _ in range(rng.randint(1 if nonzero else 0, max_terms)):
        mono = tuple(rng.randint(*exp_range) for _ in range(mu))
        coeff = rng.randint(*coeff_range)
        if coeff:
            terms[mono] = coeff
    p = LaurentPoly(mu, terms, half_step)
    if nonzero and p.is_zero():
        return LaurentPoly.const(rng.choice([1, -1, 2]), mu, half_step)
    return p


def random_turn(rng: random.Random, interior: bool = True, max_den: int = 997) -> Fraction:
    den = rng.randint(2, max_den)
    num = rng.randint(1, den - 1) if interior else rng.randint(0, den - 1)
    return Fraction(num, den)


def random_point(rng: random.Random, mu: int, interior: bool = True) -> TorusPoint:
    return TorusPoint(tuple(random_turn(rng, interior) for _ in range(mu)))


def random_hermitian(rng: np.random.Generator, n: int) -> np.ndarray:
    a = rng.uniform(-2, 2, (n, n)) + 1j * rng.uniform(-2, 2, (n, n))
    return (a + a.conj().T) / 2


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240901)


@pytest.fixture
def nprng() -> np.random.Generator:
    return np.random.default_rng(20240901)
