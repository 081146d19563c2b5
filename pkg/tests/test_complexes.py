import numpy as np
import pytest

from quatring.complexes import (ChainComplex2, GRMatrix, exotic_boundary2,
                                fox_boundaries, gr_compose, homology,
                                module_span, p_sigma_lattice, p_sum_lattice,
                                phi_factors, phi_matrix, sigma,
                                to_integer_matrix, verify_exotic_complex,
                                verify_phi_factorization, verify_prop44,
                                verify_sigma_generates, verify_stably_free)
from quatring.groupring import GroupParams, RingElement, gens, norm_element
from quatring.zlattice import IntegerLattice, identity, image, kernel, matmul

from conftest import evaluate, evaluate_matrix, irreps, random_element
from oracles import q_rank

Q28 = GroupParams(7)
REPS = irreps(7)


# Phi and its factors written straight from the formulas, evaluated in a representation

def formula_pieces(rep):
    X, Y = rep
    d = X.shape[0]
    I = np.eye(d)
    xp = lambda k: np.linalg.matrix_power(X, k % 14)
    S = sum((-1) ** k * xp(k) for k in range(14))
    x7 = xp(7)
    t = xp(-3) + xp(3)
    u = I + (I - x7) @ Y
    ubar = I - (I - x7) @ Y
    w = 7 * I - 7 * x7 - S
    c = 19 * I - 20 * x7
    return I, xp, S, x7, t, u, ubar, w, c, Y


def formula_phi(rep):
    I, xp, S, x7, t, u, ubar, w, c, Y = formula_pieces(rep)
    p11 = x7 @ u @ (I + xp(-5)) - w @ (I + t @ xp(5) @ Y)
    p12 = u @ (I - t @ Y) + (7 * I - 7 * x7) @ (I + xp(5))
    p21 = x7 @ (7 * I - 7 * x7) @ (I + xp(-5)) - c @ ubar @ (I + t @ xp(5) @ Y) + 14 * S
    p22 = w @ (I - t @ Y) + c @ ubar @ (I + xp(5))
    return np.block([[p11, p12], [p21, p22]])


def formula_factors(rep):
    I, xp, S, x7, t, u, ubar, w, c, Y = formula_pieces(rep)
    Z = np.zeros_like(I)
    F1 = np.block([[u, w], [w, c @ ubar]])
    F2 = np.block([[-x7 @ (I + xp(-5)), I - t @ Y], [I + t @ xp(5) @ Y, I + xp(5)]])
    Dg = np.block([[14 / 195 * S - I, Z], [Z, I]])
    L1 = np.block([[-I - t @ Y, -x7 @ (I + xp(-5))], [-(I + xp(5)), I - t @ xp(5) @ Y]])
    L2 = np.block([[c @ ubar, S - 7 * I + 7 * x7], [S - 7 * I + 7 * x7, u]])
    s = (xp(1) + I) @ (xp(2) - x7 + xp(12))
    return F1, F2, Dg, L1, L2, s


def blockdiag(s):
    Z = np.zeros_like(s)
    return np.block([[s, Z], [Z, s]])


def test_phi_matches_formulas_in_every_irrep():
    phi = phi_matrix()
    for rep in REPS:
        assert np.allclose(evaluate_matrix(phi, rep), formula_phi(rep))


def test_phi_factorization_oracle():
    F1, F2, Dg, L1, L2, s = phi_factors()
    for rep in REPS:
        f1, f2, dg, l1, l2, sc = formula_factors(rep)
        assert np.allclose(evaluate_matrix(F1, rep), f1)
        assert np.allclose(evaluate_matrix(Dg, rep), dg)
        # products act on row vectors: the matrix product is literal
        assert np.allclose(f1 @ f2 @ dg, formula_phi(rep))
        X, _ = rep
        I = np.eye(X.shape[0])
        swap = np.block([[0 * I, X + I], [X + I, 0 * I]])
        assert np.allclose(blockdiag(sc) @ l1 @ l2 @ f1 @ f2 @ dg, swap)


def test_phi_reports():
    assert verify_phi_factorization().passed
    rep = verify_stably_free()
    assert rep.passed
    assert rep.details["rank_image"] == 56 and rep.details["index_image"] == 25


def test_phi_integral_and_rows_mod_x_plus_one():
    phi = phi_matrix()
    assert not phi.rational
    # x -> -1, y -> i is the 1-dim rep with m = 1: rows (0, -3+4i) and (1, 0)
    rep = REPS[1]
    v = evaluate_matrix(phi, rep)
    assert np.allclose(v, [[0, -3 + 4j], [1, 0]])


def test_fox_boundaries_examples(odd_params):
    n = odd_params.n
    x, y = gens(odd_params)
    D2, D1 = fox_boundaries(odd_params)
    assert D1.rows == ((x - 1,), (y - 1,))
    assert (D2 @ D1).is_zero()
    assert D2[0, 0] == sum((x ** k for k in range(n)), RingElement.zero(odd_params))
    # relator rows evaluated in every irrep vanish against D1
    for rep in irreps(n):
        assert np.allclose(evaluate_matrix(D2, rep) @ evaluate_matrix(D1, rep), 0)


def test_integer_d2_rank():
    D2, _ = fox_boundaries(Q28)
    M = to_integer_matrix(D2)
    assert len(M) == len(M[0]) == 56
    assert q_rank(M) == 29


def test_to_integer_matrix_functorial(rng):
    p = GroupParams(3)
    for _ in range(5):
        A = GRMatrix([[random_element(p, rng, 3) for _ in range(2)] for _ in range(2)])
        B = GRMatrix([[random_element(p, rng, 3)] for _ in range(2)])
        assert to_integer_matrix(gr_compose(A, B)) == matmul(to_integer_matrix(A), to_integer_matrix(B))
        assert A @ GRMatrix.identity(p, 2) == A
    assert to_integer_matrix(GRMatrix.identity(Q28, 2)) == identity(56)
    with pytest.raises(ValueError):
        gr_compose(GRMatrix.identity(p, 2), GRMatrix.identity(p, 3))


def test_grmatrix_triples_round_trip():
    phi = phi_matrix()
    assert GRMatrix.from_triples(Q28, phi.triples()) == phi
    F1 = phi_factors()[2]
    assert GRMatrix.from_triples(Q28, F1.triples(), rational=True) == F1


def test_presentation_complex_homology():
    D2, D1 = fox_boundaries(Q28)
    H = homology(ChainComplex2(D2, D1))
    assert H.h0 == [0] and H.exact_at_c0
    assert H.h1 == []
    assert H.h2_rank == 27 and H.h2_is_submodule


def test_chain_complex_rejects_nonzero_composite():
    x, y = gens(Q28)
    D2, D1 = fox_boundaries(Q28)
    with pytest.raises(ValueError):
        ChainComplex2(GRMatrix.identity(Q28, 2), D1)


def test_sigma_examples(odd_params):
    n = odd_params.n
    x, y = gens(odd_params)
    s = sigma(odd_params)
    D2, _ = fox_boundaries(odd_params)
    assert (s @ D2).is_zero()
    assert s.left_scale(1 + y) == GRMatrix([[1 - x ** n, 1 - x ** (n + 1) + (1 - x ** -1) * y]])
    assert s.left_scale(norm_element(odd_params)).is_zero()


def test_sigma_spans_kernel_rank_oracle():
    D2, _ = fox_boundaries(Q28)
    span = module_span(sigma(Q28).rows)
    assert span.rank == 56 - q_rank(to_integer_matrix(D2)) == 27


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_sigma_generates_kernel(n):
    rep = verify_sigma_generates(GroupParams(n))
    assert rep.passed, rep.details.get("failures")
    assert rep.details["rank_ker_D2"] == 4 * n - 1


def test_restricted_kernel_headline():
    rep = verify_prop44(Q28, -3, 4)
    assert rep.passed, rep.details.get("failures")
    assert rep.details["rank_P_sigma"] == 27


def test_restricted_kernel_other_cases():
    # P = ZG: P sigma is ZG sigma = ker D2
    rep = verify_prop44(Q28, 1, 0)
    assert rep.passed
    D2, _ = fox_boundaries(Q28)
    assert p_sigma_lattice(Q28, 1, 0) == kernel(to_integer_matrix(D2))
    for n, a, b in [(3, 2, 1), (5, 2, 3)]:
        assert verify_prop44(GroupParams(n), a, b).passed


def test_c2_decomposition():
    C2 = module_span(sigma(Q28).rows) + p_sum_lattice(Q28, -3, 4)
    assert C2 == IntegerLattice.full(56)


def test_exotic_boundary_matches_product():
    d2 = exotic_boundary2()
    D2, D1 = fox_boundaries(Q28)
    assert d2 == phi_matrix() @ D2
    assert (d2 @ D1).is_zero()
    for rep in REPS:
        assert np.allclose(evaluate_matrix(d2, rep), formula_phi(rep) @ evaluate_matrix(D2, rep))


def test_exotic_complex():
    rep, H = verify_exotic_complex()
    assert rep.passed, rep.details.get("failures")
    assert H.h0 == [0] and H.h1 == [] and H.h2_rank == 27
    assert H.h2_is_submodule
