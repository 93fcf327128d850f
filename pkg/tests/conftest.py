"""Shared randomized-input helpers for the test suite."""

import random
from fractions import Fraction

import pytest

from commutant.fields import PrimeField, RationalField, make_field
from commutant.linalg import Matrix, rank
from commutant.poly import Poly


@pytest.fixture
def q_field():
    return make_field("q")


@pytest.fixture
def gf5():
    return make_field("gf:5")


def random_matrix(field, n, rng, bound=9):
    if isinstance(field, PrimeField):
        rows = [[rng.randrange(field.p) for _ in range(n)] for _ in range(n)]
    else:
        rows = [
            [Fraction(rng.randint(-bound, bound)) for _ in range(n)]
            for _ in range(n)
        ]
    return Matrix(field, rows, validate=False)


def random_invertible(field, n, rng, bound=9):
    while True:
        M = random_matrix(field, n, rng, bound)
        if rank(M) == n:
            return M


def random_monic(field, degree, rng, bound=9):
    if isinstance(field, PrimeField):
        coeffs = [rng.randrange(field.p) for _ in range(degree)]
    else:
        coeffs = [Fraction(rng.randint(-bound, bound)) for _ in range(degree)]
    return Poly(field, coeffs + [field.one], validate=False)


def jordan_block(field, eigenvalue, size):
    """Upper-triangular Jordan block J_size(eigenvalue)."""
    m = Matrix.zeros(field, size, size)
    lam = field.from_int(eigenvalue) if isinstance(eigenvalue, int) else eigenvalue
    for i in range(size):
        m.rows[i][i] = lam
        if i + 1 < size:
            m.rows[i][i + 1] = field.one
    return m
