import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from quatring.groupring import (GroupElement, GroupParams, ParameterError,
                                RingElement, augmentation, elements, gens,
                                left_mult_matrix, mul_group, mult_table,
                                norm_element, one, right_mult_matrix, ring_add,
                                ring_mul, special_elements)
from quatring.zlattice import matmul, rank

from conftest import evaluate, irreps, random_element


def test_params_validation():
    with pytest.raises(ParameterError):
        GroupParams(1)
    with pytest.raises(ParameterError):
        GroupParams(6).require_odd()
    GroupParams(7).require_odd()


def test_normal_forms_unique(odd_params):
    els = elements(odd_params)
    assert len(set(els)) == odd_params.order
    assert [g.index for g in els] == list(range(odd_params.order))
    with pytest.raises(ParameterError):
        GroupElement(odd_params, 2 * odd_params.n, 0)


def test_mul_group_examples(q28):
    n = q28.n
    x = GroupElement(q28, 1, 0)
    y = GroupElement(q28, 0, 1)
    e = GroupElement(q28, 0, 0)
    assert y * y == GroupElement(q28, n, 0)
    for g in elements(q28):
        assert e * g == g == g * e
    assert y * x == GroupElement(q28, 2 * n - 1, 1)
    with pytest.raises(ParameterError):
        mul_group(x, GroupElement(GroupParams(5), 1, 0))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 7, 9])
def test_mul_group_matches_matrix_model(n):
    # oracle: the faithful direct sum of irreducible representations
    params = GroupParams(n)
    reps = irreps(n)

    def image(g):
        return [np.linalg.matrix_power(X, g.i) @ np.linalg.matrix_power(Y, g.j)
                for X, Y in reps]

    imgs = {g: image(g) for g in elements(params)}
    for g, h in itertools.product(elements(params), repeat=2):
        gh = mul_group(g, h)
        assert all(np.allclose(a @ b, c)
                   for a, b, c in zip(imgs[g], imgs[h], imgs[gh]))


@pytest.mark.parametrize("n", [3, 5, 7, 9, 4])
def test_relators(n):
    params = GroupParams(n)
    x = GroupElement(params, 1, 0)
    y = GroupElement(params, 0, 1)
    e = GroupElement(params, 0, 0)
    assert x ** n == y ** 2
    assert y ** 4 == e
    assert y * x * y.inverse() == x.inverse()
    # the presentation's relators themselves
    assert x ** n * y ** -2 == e
    assert y * x * y * x ** (-n + 1) == e


def test_mult_table_agrees_with_mul_group(q28):
    table = mult_table(q28)
    els = elements(q28)
    for g, h in itertools.product(els, repeat=2):
        assert els[table[g.index][h.index]] == g * h


def test_ring_add_examples(q28):
    x, y = gens(q28)
    p = 3 * x - y
    assert ring_add(p, RingElement.zero(q28)) == p
    assert ring_add(x + 1, -1 - x).is_zero()
    assert (-3 + 4 * y) + (x + 1) == RingElement.from_triples(q28, [[-2, 0, 0], [1, 1, 0], [4, 0, 1]])


def test_ring_mul_examples(q28):
    x, y = gens(q28)
    N = norm_element(q28)
    psi = special_elements(q28)["psi"]
    assert ring_mul(x + 1, y) == y * x ** -1 * (x + 1)
    assert (N * (x - 1)).is_zero()
    assert psi * (x + 1) == 1 + x ** 7


def test_two_sided_identity_from_paper(odd_params):
    x, y = gens(odd_params)
    for a, b in [(-3, 4), (2, 1), (1, 0)]:
        u = a + b * y
        assert u * x == x * u + b * y * (1 - x ** -1) * (x + 1)


def test_augmentation_examples(q28):
    x, y = gens(q28)
    sp = special_elements(q28)
    assert augmentation(sp["N"]) == 28
    assert augmentation(sp["sigma_minus"]) == 0
    assert augmentation(-3 + 4 * y) == 1


def test_special_elements_n7(q28):
    sp = special_elements(q28)
    x, _ = gens(q28)
    assert sp["N"].coeffs == (1,) * 28
    assert sp["sigma_minus"] == sum(((-x) ** k for k in range(14)), RingElement.zero(q28))
    assert sp["psi"] == 1 - x + x**2 - x**3 + x**4 - x**5 + x**6


def test_right_mult_matrix_examples(q28):
    x, y = gens(q28)
    size = q28.order
    assert right_mult_matrix(one(q28)) == [[int(i == j) for j in range(size)] for i in range(size)]
    MN = right_mult_matrix(norm_element(q28))
    assert all(row == [1] * size for row in MN) and rank(MN) == 1
    assert right_mult_matrix((x + 1) * y) == matmul(right_mult_matrix(x + 1), right_mult_matrix(y))


def test_negative_powers(q28):
    x, y = gens(q28)
    assert x ** -1 * x == 1
    assert y ** -1 == x ** 7 * y
    assert (-y) ** -1 == -(y ** -1)
    with pytest.raises(ValueError):
        (x + 1) ** -1


def test_domain_and_param_mismatch(q28):
    x, _ = gens(q28)
    with pytest.raises(ParameterError):
        x + gens(GroupParams(5))[0]
    with pytest.raises(TypeError):
        x + x.to_rational()
    with pytest.raises(TypeError):
        RingElement(q28, [Fraction(1, 2)] + [0] * 27)


def test_rational_lowest_terms(q28):
    p = RingElement(q28, [Fraction(2, 4)] + [0] * 27, rational=True)
    assert p.coeffs[0] == Fraction(1, 2) and p.coeffs[0].denominator == 2
    assert (p * 2).to_integer() == 1


def test_triples_round_trip(q28, rng):
    for rational in (False, True):
        p = random_element(q28, rng, rational=rational)
        assert RingElement.from_triples(q28, p.triples(), rational) == p


def test_ring_mul_matches_representations(rng):
    for n in (3, 4, 7):
        params = GroupParams(n)
        reps = irreps(n)
        for _ in range(5):
            p = random_element(params, rng)
            q = random_element(params, rng)
            pq = p * q
            for rep in reps:
                assert np.allclose(evaluate(p, rep) @ evaluate(q, rep), evaluate(pq, rep))


# properties

coeff = st.integers(-6, 6)


def elem(params, rational=False):
    if rational:
        c = st.fractions(min_value=-4, max_value=4, max_denominator=5)
    else:
        c = coeff
    return st.lists(c, min_size=params.order, max_size=params.order).map(
        lambda cs: RingElement(params, cs, rational))


Q20 = GroupParams(5)


@settings(max_examples=40, deadline=None)
@given(elem(Q20), elem(Q20), elem(Q20))
def test_ring_axioms_integral(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p + q) * r == p * r + q * r
    assert augmentation(p * q) == augmentation(p) * augmentation(q)


@settings(max_examples=25, deadline=None)
@given(elem(Q20, True), elem(Q20, True), elem(Q20, True))
def test_ring_axioms_rational(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert augmentation(p * q) == augmentation(p) * augmentation(q)


@settings(max_examples=40, deadline=None)
@given(elem(Q20))
def test_norm_element_central(p):
    N = norm_element(Q20)
    assert p * N == N * p == augmentation(p) * N
    for g in elements(Q20):
        G = RingElement.from_group(g)
        assert G * N == N * G == N


@settings(max_examples=30, deadline=None)
@given(elem(Q20), elem(Q20))
def test_right_mult_matrix_homomorphism(p, q):
    Mp, Mq = right_mult_matrix(p), right_mult_matrix(q)
    assert right_mult_matrix(p + q) == [[a + b for a, b in zip(r, s)] for r, s in zip(Mp, Mq)]
    assert right_mult_matrix(p * q) == matmul(Mp, Mq)
    assert left_mult_matrix(p * q) == matmul(left_mult_matrix(q), left_mult_matrix(p))
    # injective: the identity row recovers p
    assert Mp[0] == list(p.coeffs)
    if not p:
        assert not any(any(r) for r in Mp)
