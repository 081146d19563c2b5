import cmath
import random

import numpy as np
import pytest

from quatring.groupring import GroupParams, RingElement


def irreps(n):
    """All complex irreducible representations of Q_4n as (X, Y) matrix pairs.

    Built directly from the presentation, independently of the group-ring
    multiplication table: four characters and n - 1 two-dimensional ones.
    """
    out = []
    if n % 2:
        for m in range(4):
            out.append((np.array([[(-1) ** m]], complex), np.array([[1j ** m]], complex)))
    else:
        for sx in (1, -1):
            for sy in (1, -1):
                out.append((np.array([[sx]], complex), np.array([[sy]], complex)))
    zeta = cmath.exp(1j * cmath.pi / n)
    for k in range(1, n):
        X = np.diag([zeta ** k, zeta ** -k])
        Y = np.array([[0, (-1) ** k], [1, 0]], complex)
        out.append((X, Y))
    return out


def evaluate(p, rep):
    """Image of a ring element under a representation (X, Y)."""
    X, Y = rep
    m = 2 * p.params.n
    d = X.shape[0]
    acc = np.zeros((d, d), complex)
    for k, c in enumerate(p.coeffs):
        if c:
            i, j = k % m, k // m
            acc += float(c) * np.linalg.matrix_power(X, i) @ np.linalg.matrix_power(Y, j)
    return acc


def evaluate_matrix(A, rep):
    """Block matrix image of a GRMatrix under a representation."""
    return np.block([[evaluate(e, rep) for e in row] for row in A.rows])


def random_element(params, rng, bound=5, density=0.5, rational=False):
    coeffs = []
    for _ in range(params.order):
        if rng.random() < density:
            c = rng.randint(-bound, bound)
            if rational:
                from fractions import Fraction
                c = Fraction(c, rng.randint(1, 4))
            coeffs.append(c)
        else:
            coeffs.append(0)
    return RingElement(params, coeffs, rational)


@pytest.fixture
def rng():
    return random.Random(20261015)


@pytest.fixture(params=[3, 5, 7, 9])
def odd_params(request):
    return GroupParams(request.param)


@pytest.fixture
def q28():
    return GroupParams(7)
