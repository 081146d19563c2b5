from math import gcd

import pytest

from quatring.groupring import GroupParams, gens, norm_element, one
from quatring.ideals import (ideal, is_two_sided, left_ideal_lattice,
                             norm_product_lattice, p_ideal,
                             projectivity_criterion, quotient_structure)
from quatring.zlattice import IntegerLattice

from oracles import q_det


def lattice_of(params, *gs):
    return left_ideal_lattice(ideal(params, *gs))


def test_left_ideal_examples(q28):
    x, y = gens(q28)
    assert lattice_of(q28, one(q28)).lattice == IntegerLattice.full(28)
    assert lattice_of(q28, norm_element(q28)).lattice.rank == 1
    P = left_ideal_lattice(p_ideal(q28, -3, 4))
    assert P.lattice.rank == 28 and P.lattice.index() == 25
    assert -3 + 4 * y in P and x + 1 in P and 25 * one(q28) in P
    assert 1 + 0 * x not in P


def test_left_ideal_is_smallest_closed(q28):
    # fixpoint: x*basis and y*basis add nothing; generators are inside
    x, y = gens(q28)
    P = left_ideal_lattice(p_ideal(q28, -3, 4))
    basis = P.elements_basis()
    extended = IntegerLattice(28, [p.coeffs for p in basis]
                              + [(x * p).coeffs for p in basis]
                              + [(y * p).coeffs for p in basis])
    assert extended == P.lattice
    # the Z-span of the generators alone is strictly smaller
    assert IntegerLattice(28, [(-3 + 4 * y).coeffs, (x + 1).coeffs]).rank == 2


def test_two_sided_examples(q28):
    x, y = gens(q28)
    assert is_two_sided(left_ideal_lattice(p_ideal(q28, -3, 4)))
    assert is_two_sided(lattice_of(q28, norm_element(q28)))
    assert is_two_sided(lattice_of(q28, x + 1))
    assert not is_two_sided(lattice_of(q28, 1 + y + x))


def test_quotient_structure_examples(q28):
    assert quotient_structure(left_ideal_lattice(p_ideal(q28, -3, 4))) == [25]
    assert quotient_structure(left_ideal_lattice(p_ideal(q28, 1, 0))) == []
    assert sorted(quotient_structure(left_ideal_lattice(p_ideal(q28, 2, 4)))) == [2, 10]


def test_quotient_structure_against_elimination_oracle():
    # order from a fraction-elimination determinant, exponent from membership of t*g
    params = GroupParams(3)
    for a, b, t in [(2, 1, 5), (3, 3, 6), (-1, 4, 17)]:
        I = left_ideal_lattice(p_ideal(params, a, b))
        assert abs(q_det([list(r) for r in I.lattice.basis])) == a * a + b * b
        assert all([t * int(i == j) for i in range(12)] in I.lattice for j in range(12))
        assert [t // 2 if t % 2 == 0 else 1] + [0] * 11 not in I.lattice
        assert max(quotient_structure(I)) == t


def test_projectivity_examples(q28):
    c = projectivity_criterion(q28, -3, 4)
    assert (c["k"], c["d"], c["t"], c["coprime"]) == (25, 1, 25, True)
    assert c["exponent_coprime_to_4n"] and gcd(25, 14) == 1
    c = projectivity_criterion(q28, 1, 1)
    assert c["k"] == 2 and not c["coprime"]
    # even n uses a^2 - b^2; gcd(5, 12) = 1
    c = projectivity_criterion(GroupParams(6), 3, 2)
    assert c["k"] == 5 and c["coprime"] and c["quotient"] == [5]


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_p_quotient_grid(n):
    params = GroupParams(n)
    for a in range(-5, 6):
        for b in range(-5, 6):
            if a == b == 0:
                continue
            k = a * a + b * b
            d = gcd(a, b)
            t = k // d
            I = left_ideal_lattice(p_ideal(params, a, b))
            assert is_two_sided(I)
            assert sorted(quotient_structure(I)) == sorted(f for f in (t, d) if f != 1)
            assert I.lattice.index() == k


def test_norm_product_examples(q28):
    x, _ = gens(q28)
    N = norm_element(q28)
    NP = norm_product_lattice(left_ideal_lattice(p_ideal(q28, -3, 4)))
    assert NP == IntegerLattice(28, [N.coeffs])
    assert norm_product_lattice(lattice_of(q28, N)) == IntegerLattice(28, [(28 * N).coeffs])
    assert norm_product_lattice(lattice_of(q28, x + 1)) == IntegerLattice(28, [(2 * N).coeffs])


@pytest.mark.parametrize("a,b", [(2, 1), (-3, 4), (4, 1), (1, 2), (-1, 0)])
def test_norm_product_augmentation_one(a, b):
    # P contains a + by - (a + b - 1)(x + 1)/... ; augmentation gcd(a+b, 2) = 1 suffices
    params = GroupParams(5)
    P = left_ideal_lattice(p_ideal(params, a, b))
    expected = IntegerLattice(20, [norm_element(params).coeffs])
    if gcd(a + b, 2) == 1:
        assert norm_product_lattice(P) == expected
