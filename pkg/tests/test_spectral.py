import numpy as np
import pytest

from gen import conditioned, crandn, direct_eval, random_diagonalizable, random_realization

from realcomp import (NotDiagonalizable, Realization, controllability_matrix, evaluate,
                      hankel_rank, inverse_realization, is_minimal, kalman_controllable,
                      mcmillan_degree, numeric_rank, oracle_points, pbh_controllable,
                      pbh_observable, product_realization, projection_realization,
                      similarity, spectral_projections)


def test_pbh_examples():
    assert not pbh_controllable([[0.0]], [[0.0]])
    assert pbh_controllable(np.diag([1.0, 2.0]), [[1.0], [1.0]])
    # a double eigenvalue needs at least two inputs
    assert not pbh_controllable(np.diag([1.0, 1.0]), [[1.0], [1.0]])
    assert pbh_controllable(np.diag([1.0, 1.0]), np.eye(2))


def test_pbh_observable_examples():
    rng = np.random.default_rng(21)
    A, _, _ = random_diagonalizable(rng, 4)
    assert pbh_observable(A, np.eye(4))
    assert not pbh_observable(np.diag([1.0, 2.0]), [[1.0, 0.0]])
    C = crandn(rng, 2, 4)
    assert pbh_observable(A, C) == pbh_controllable(A.conj().T, C.conj().T)


def test_pbh_requires_diagonalizable():
    with pytest.raises(NotDiagonalizable):
        pbh_controllable([[0.0, 1.0], [0.0, 0.0]], [[0.0], [1.0]])


def test_pbh_matches_kalman_on_example():
    A, B = np.diag([1.0, 2.0]), np.array([[1.0], [1.0]])
    assert numeric_rank(controllability_matrix(A, B)) == 2
    assert kalman_controllable(A, B)


def test_is_minimal_examples():
    assert is_minimal(Realization.constant([[1.0]]))
    rng = np.random.default_rng(22)
    R = random_realization(rng, 3, 2, 2, d_cond=5.0)
    assert is_minimal(R)
    assert not is_minimal(product_realization(R, inverse_realization(R)))
    assert mcmillan_degree(product_realization(R, inverse_realization(R))) == 0


def test_is_minimal_jordan_falls_back_to_kalman():
    R = Realization([[0.0, 1.0], [0.0, 0.0]], [[0.0], [1.0]], [[1.0, 0.0]], [[0.0]])
    assert is_minimal(R)
    R = Realization([[0.0, 1.0], [0.0, 0.0]], [[1.0], [0.0]], [[1.0, 0.0]], [[0.0]])
    assert not is_minimal(R)


def test_mcmillan_degree_three_poles():
    R = Realization(np.diag([-1.0, -2.0, -3.0]), np.ones((3, 1)), [[1.0, 2.0, 3.0]], [[0.0]])
    assert mcmillan_degree(R) == 3
    assert hankel_rank(R) == 3
    assert mcmillan_degree(Realization.constant([[1.0]])) == 0


def test_mcmillan_degree_invariants():
    rng = np.random.default_rng(23)
    for _ in range(10):
        n = int(rng.integers(1, 6))
        R = random_realization(rng, n, 2, 2)
        # drop an input direction to make some draws non-minimal
        if rng.uniform() < 0.5:
            R = Realization(R.A, np.zeros_like(R.B), R.C, R.D)
        d = mcmillan_degree(R)
        assert d <= n
        assert (d == n) == is_minimal(R)
        assert mcmillan_degree(similarity(R, conditioned(rng, n, 100.0))) == d
        assert hankel_rank(R) == d


def test_spectral_projections_identity():
    sd = spectral_projections(np.eye(3))
    assert len(sd.terms) == 1
    a, P, k = sd.terms[0]
    assert a == 1 and k == 3 and np.allclose(P, np.eye(3))


def test_spectral_projections_invariants():
    rng = np.random.default_rng(24)
    A, _, _ = random_diagonalizable(rng, 6, [1, 1, 2, 3j, 3j, -1])
    sd = spectral_projections(A)
    assert sd.multiplicities == [1, 2, 2, 1] or sum(sd.multiplicities) == 6
    assert np.linalg.norm(sum(sd.projections) - np.eye(6)) <= 1e-9
    assert np.linalg.norm(sd.reconstruct() - A) <= 1e-9
    for j, Pj in enumerate(sd.projections):
        assert numeric_rank(Pj, 1e-8) == sd.multiplicities[j]
        for k, Pk in enumerate(sd.projections):
            assert np.linalg.norm(Pj @ Pk - (Pj if j == k else 0)) <= 1e-9
    for z in (2 + 2j, -3.0, 0.5j):
        assert np.linalg.norm(sd.resolvent(z) - np.linalg.inv(z * np.eye(6) - A)) <= 1e-9


def test_spectral_projections_jordan():
    with pytest.raises(NotDiagonalizable):
        spectral_projections([[1.0, 1.0], [0.0, 1.0]])


def test_projection_realization_example():
    R = Realization(np.diag([1.0, 2.0]), [[1.0], [1.0]], [[1.0, 1.0]], [[0.0]])
    pf = projection_realization(R)
    assert [a for a, _, _ in pf.terms] == [1, 2]
    assert np.allclose([r[0, 0] for r in pf.residues], [1, 1])


def test_projection_realization_sums_and_values():
    rng = np.random.default_rng(25)
    A, _, _ = random_diagonalizable(rng, 4, [1, 1, -2, 3j])
    R = Realization(A, crandn(rng, 4, 2), crandn(rng, 3, 4), crandn(rng, 3, 2))
    for distinct in (False, True):
        pf = projection_realization(R, distinct=distinct)
        assert len(pf.terms) == (3 if distinct else 4)
        assert np.allclose(sum(B for _, B, _ in pf.terms), R.B)
        assert np.allclose(sum(C for _, _, C in pf.terms), R.C)
        for z in oracle_points([R]):
            assert np.linalg.norm(pf(z) - direct_eval(R, z)) <= 1e-9


def test_projection_terms_match_projected_resolvent():
    rng = np.random.default_rng(26)
    A, _, _ = random_diagonalizable(rng, 3)
    R = Realization(A, crandn(rng, 3, 2), crandn(rng, 2, 3), np.zeros((2, 2)))
    sd = spectral_projections(A)
    pf = projection_realization(R, distinct=True)
    z = 1.5 + 0.5j
    for (a, Bj, Cj), P in zip(pf.terms, sd.projections):
        lhs = Cj @ Bj / (z - a)
        rhs = R.C @ P @ np.linalg.inv(z * np.eye(3) - A) @ P @ R.B
        assert np.linalg.norm(lhs - rhs) <= 1e-10


def test_projection_realization_identity_distinct():
    R = Realization(np.eye(2), np.eye(2), np.eye(2), np.zeros((2, 2)))
    assert len(projection_realization(R, distinct=True).terms) == 1
    assert projection_realization(Realization.constant([[1.0]])).terms == []


def test_evaluate_matches_partial_fractions_scalar():
    R = Realization(np.diag([-1.0, -2.0]), [[1.0], [1.0]], [[1.0, 1.0]], [[0.0]])
    z = 1.0
    assert abs(evaluate(R, z)[0, 0] - (1 / 2 + 1 / 3)) <= 1e-15
