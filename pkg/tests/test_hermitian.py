"""Inertia engine and solver: frozen examples, property suites, oracles."""

import numpy as np
import pytest

from linksig._kernels import available_backends, jacobi_eigenvalues
from linksig.errors import InvalidInput, NonSquare, NotHermitian
from linksig.hermitian import (
    NonUnique,
    NoSolution,
    Solution,
    exact_symmetric_inertia,
    inertia,
    solve,
)

from conftest import random_hermitian


def test_inertia_examples():
    assert inertia(np.array([[0, 64], [64, 0]], dtype=complex)).pair == (0, 0)
    assert inertia(np.array([[-4.0]])).pair == (-1, 0)
    r = inertia(np.zeros((2, 2)))
    assert r.pair == (0, 2) and r.certified
    r0 = inertia(np.zeros((0, 0)))
    assert r0.pair == (0, 0) and r0.certified


def test_inertia_rejects_bad_input():
    with pytest.raises(NonSquare):
        inertia(np.zeros((2, 3)))
    with pytest.raises(NotHermitian):
        inertia(np.array([[0, 1], [2, 0]], dtype=complex))


def test_certified_band():
    # an eigenvalue sitting inside the uncertain band flips the flag
    m = np.diag([1.0, 5e-9])
    r = inertia(m, tau=1e-9)
    assert not r.certified
    ok = inertia(np.diag([1.0, 1e-3]), tau=1e-9)
    assert ok.certified and ok.pair == (2, 0)


def test_external_scale_controls_classification():
    # a cancellation residue must read as zero relative to the data scale
    m = np.array([[3e-17]])
    assert inertia(m).pair in ((1, 0), (-1, 0))  # matrix-norm scaling cannot know
    r = inertia(m, scale=4.0)
    assert r.pair == (0, 1) and r.certified


def test_jacobi_matches_numpy_oracle(nprng):
    for _ in range(60):
        n = int(nprng.integers(1, 9))
        m = random_hermitian(nprng, n)
        ours = np.sort(jacobi_eigenvalues(m)[0])
        ref = np.sort(np.linalg.eigvalsh(m))
        assert np.max(np.abs(ours - ref)) < 1e-10 * max(1.0, np.max(np.abs(ref)))


def test_backends_agree(nprng):
    if len(available_backends()) < 2:
        pytest.skip("numba unavailable")
    for _ in range(20):
        n = int(nprng.integers(1, 9))
        m = random_hermitian(nprng, n)
        a = np.sort(jacobi_eigenvalues(m, backend="numba")[0])
        b = np.sort(jacobi_eigenvalues(m, backend="numpy")[0])
        assert np.max(np.abs(a - b)) < 1e-12 * max(1.0, np.max(np.abs(a)))


def _random_inertia_instance(nprng, n):
    """A Hermitian matrix with known inertia: congruence of an integer diagonal."""
    diag = nprng.integers(-5, 6, n)
    while True:
        p = nprng.uniform(-2, 2, (n, n)) + 1j * nprng.uniform(-2, 2, (n, n))
        if np.linalg.cond(p) < 50:
            break
    m = p.conj().T @ np.diag(diag).astype(complex) @ p
    sig = int(np.sum(diag > 0) - np.sum(diag < 0))
    null = int(np.sum(diag == 0))
    return m, sig, null


def test_congruence_invariance(nprng):
    for _ in range(200):
        n = int(nprng.integers(1, 13))
        m, sig, null = _random_inertia_instance(nprng, n)
        r = inertia(m)
        assert r.certified
        assert r.pair == (sig, null)


def test_congruence_of_arbitrary_hermitian(nprng):
    # inertia(P* M P) == inertia(M) for random M and bounded-condition P,
    # compared only when both classifications are certified
    for _ in range(200):
        n = int(nprng.integers(1, 13))
        m = random_hermitian(nprng, n)
        while True:
            p = nprng.uniform(-2, 2, (n, n)) + 1j * nprng.uniform(-2, 2, (n, n))
            if np.linalg.cond(p) < 50:
                break
        r = inertia(m)
        rc = inertia(p.conj().T @ m @ p)
        if r.certified and rc.certified:
            assert rc.pair == r.pair


def test_direct_sum_additivity(nprng):
    for _ in range(100):
        na, nb = int(nprng.integers(1, 7)), int(nprng.integers(1, 7))
        ma, sa, za = _random_inertia_instance(nprng, na)
        mb, sb, zb = _random_inertia_instance(nprng, nb)
        m = np.zeros((na + nb, na + nb), dtype=complex)
        m[:na, :na] = ma
        m[na:, na:] = mb
        r = inertia(m)
        assert r.pair == (sa + sb, za + zb)


def test_negation(nprng):
    for _ in range(100):
        n = int(nprng.integers(1, 9))
        m, _, _ = _random_inertia_instance(nprng, n)
        r = inertia(m)
        rn = inertia(-m)
        assert rn.signature == -r.signature
        assert rn.nullity == r.nullity


def test_diagonal_exactness(nprng):
    for _ in range(100):
        n = int(nprng.integers(1, 10))
        d = nprng.integers(-8, 9, n)
        d[np.abs(d) < 1] = 0
        r = inertia(np.diag(d).astype(complex))
        assert r.pair == (int(np.sum(d > 0) - np.sum(d < 0)), int(np.sum(d == 0)))


def test_solve_examples():
    n = 4
    assert isinstance(solve(np.eye(2), np.array([3.0, -1j])), Solution)
    s = solve(np.eye(2), np.array([3.0, -1j]))
    assert np.allclose(s.alpha, [3.0, -1j])
    assert isinstance(solve(np.zeros((2, 2)), np.array([1.0, 0.0])), NoSolution)
    res = solve(np.zeros((2, 2)), np.zeros(2))
    assert isinstance(res, NonUnique) and res.kernel_basis.shape == (2, 2)
    assert solve(np.zeros((0, 0)), np.zeros(0)).alpha.shape == (0,)


def test_solve_dimension_mismatch():
    with pytest.raises(InvalidInput):
        solve(np.eye(2), np.zeros(3))
    with pytest.raises(NonSquare):
        solve(np.zeros((2, 3)), np.zeros(2))


def test_solve_residual_property(nprng):
    for _ in range(200):
        n = int(nprng.integers(1, 9))
        m = nprng.uniform(-3, 3, (n, n)) + 1j * nprng.uniform(-3, 3, (n, n))
        b = nprng.uniform(-3, 3, n) + 1j * nprng.uniform(-3, 3, n)
        res = solve(m, b)
        if isinstance(res, (Solution, NonUnique)):
            alpha = res.alpha
            lhs = np.linalg.norm(m @ alpha - b)
            assert lhs <= 1e-8 * (np.linalg.norm(m) * np.linalg.norm(alpha) + np.linalg.norm(b))


def test_solve_rank_deficient_consistent(nprng):
    for _ in range(100):
        n = int(nprng.integers(2, 7))
        r = int(nprng.integers(1, n))
        basis = nprng.uniform(-2, 2, (n, r)) + 1j * nprng.uniform(-2, 2, (n, r))
        m = basis @ (nprng.uniform(-2, 2, (r, n)) + 1j * nprng.uniform(-2, 2, (r, n)))
        b = m @ (nprng.uniform(-1, 1, n) + 0j)
        res = solve(m, b)
        assert isinstance(res, NonUnique)
        assert np.linalg.norm(m @ res.alpha - b) <= 1e-7 * max(1.0, np.linalg.norm(m) * np.linalg.norm(res.alpha))
        # kernel basis vectors are genuine kernel elements
        for f in range(res.kernel_basis.shape[1]):
            v = res.kernel_basis[:, f]
            assert np.linalg.norm(m @ v) <= 1e-7 * max(1.0, np.linalg.norm(m))


def test_exact_symmetric_inertia_cases():
    assert exact_symmetric_inertia([[-1, 1], [1, -1]]) == (-1, 1)
    assert exact_symmetric_inertia([[0, 1], [1, 0]]) == (0, 0)
    assert exact_symmetric_inertia([[0, 0], [0, 0]]) == (0, 2)
    assert exact_symmetric_inertia([[0]]) == (0, 1)
    assert exact_symmetric_inertia([]) == (0, 0)
    assert exact_symmetric_inertia([[2]]) == (1, 0)


def test_exact_symmetric_inertia_random(nprng):
    for _ in range(150):
        n = int(nprng.integers(1, 7))
        d = nprng.integers(-4, 5, n)
        p = nprng.integers(-2, 3, (n, n))
        while abs(np.linalg.det(p)) < 0.5:
            p = nprng.integers(-2, 3, (n, n))
        m = p.T @ np.diag(d) @ p
        sig, null = exact_symmetric_inertia(m.tolist())
        assert sig == int(np.sum(d > 0) - np.sum(d < 0))
        assert null == int(np.sum(d == 0))
