import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import kron_loop, partial_trace_loop
from qcorr.linalg import (
    ValidationError,
    basis_op,
    hermitian_eig,
    is_psd,
    kron,
    partial_trace,
    partial_transpose,
)
from qcorr.states import horodecki3, max_entangled
from randstates import random_density, random_hermitian


def test_kron_identity():
    assert np.array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))


def test_kron_basis_placement():
    out = kron(basis_op(2, 0, 0), basis_op(2, 1, 1))
    expected = np.zeros((4, 4))
    expected[1, 1] = 1
    assert np.array_equal(out, expected)


def test_kron_matches_loop(rng):
    a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    b = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    np.testing.assert_allclose(kron(a, b), kron_loop(a, b), atol=1e-15)


def test_kron_mixed_product_and_associativity(rng):
    a, b, c, d = (rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3)) for _ in range(4))
    np.testing.assert_allclose(kron(a, b) @ kron(c, d), kron(a @ c, b @ d), atol=1e-12)
    np.testing.assert_allclose(kron(kron(a, b), c), kron(a, kron(b, c)), atol=1e-12)


def test_partial_trace_product(rng):
    rho, sigma = random_density(3, rng), random_density(2, rng)
    np.testing.assert_allclose(partial_trace(np.kron(rho, sigma), "K", (3, 2)), rho, atol=1e-14)
    np.testing.assert_allclose(partial_trace(np.kron(rho, sigma), "H", (3, 2)), sigma, atol=1e-14)


def test_partial_trace_max_entangled():
    expected = partial_trace_loop(max_entangled(3), 3, 3, "K")
    np.testing.assert_allclose(expected, np.eye(3) / 3, atol=1e-15)
    np.testing.assert_allclose(partial_trace(max_entangled(3), "K"), expected, atol=1e-15)


def test_partial_trace_horodecki_marginal():
    theta = horodecki3(2.5)
    np.testing.assert_allclose(partial_trace_loop(theta, 3, 3, "H"), np.eye(3) / 3, atol=1e-15)
    np.testing.assert_allclose(partial_trace(theta, "H"), np.eye(3) / 3, atol=1e-15)


@pytest.mark.parametrize("dims", [(2, 2), (2, 3), (3, 2), (3, 4)])
def test_partial_trace_against_loop(rng, dims):
    theta = random_density(dims[0] * dims[1], rng)
    for side in "HK":
        np.testing.assert_allclose(partial_trace(theta, side, dims), partial_trace_loop(theta, *dims, side), atol=1e-14)


def test_partial_transpose_product(rng):
    rho, sigma = random_density(2, rng), random_density(3, rng)
    np.testing.assert_allclose(partial_transpose(np.kron(rho, sigma), "K", (2, 3)), np.kron(rho, sigma.T), atol=1e-15)
    np.testing.assert_allclose(partial_transpose(np.kron(rho, sigma), "H", (2, 3)), np.kron(rho.T, sigma), atol=1e-15)


def test_partial_transpose_bell_spectrum():
    w = np.linalg.eigvalsh(partial_transpose(max_entangled(2)))
    np.testing.assert_allclose(w, [-0.5, 0.5, 0.5, 0.5], atol=1e-15)


def test_partial_transpose_entrywise(rng):
    theta = random_density(6, rng)
    pt = partial_transpose(theta, "K", (2, 3))
    for i in range(2):
        for j in range(2):
            for a in range(3):
                for b in range(3):
                    assert pt[i * 3 + a, j * 3 + b] == theta[i * 3 + b, j * 3 + a]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from([(2, 2), (2, 3), (3, 3), (4, 2)]))
def test_partial_operations_properties(seed, dims):
    rng = np.random.default_rng(seed)
    theta = random_density(dims[0] * dims[1], rng)
    pt = partial_transpose(theta, "K", dims)
    np.testing.assert_allclose(partial_transpose(pt, "K", dims), theta, atol=1e-15)
    assert abs(np.trace(partial_trace(theta, "K", dims)) - np.trace(theta)) <= 1e-12
    np.testing.assert_allclose(partial_trace(pt, "H", dims), partial_trace(theta, "H", dims).T, atol=1e-12)
    np.testing.assert_allclose(pt, pt.conj().T, atol=1e-15)
    assert abs(np.trace(pt) - 1) <= 1e-12


def test_hermitian_eig_simple():
    w, _ = hermitian_eig(np.diag([1.0, 2.0, 3.0]))
    np.testing.assert_allclose(w, [1, 2, 3])
    w, _ = hermitian_eig(np.array([[0, 1], [1, 0]]))
    np.testing.assert_allclose(w, [-1, 1], atol=1e-15)


def test_hermitian_eig_horodecki_spectrum():
    w, _ = hermitian_eig(horodecki3(2.5))
    expected = np.sort([0, 0, 2 / 7] + [2.5 / 21] * 6)
    np.testing.assert_allclose(w, expected, atol=1e-12)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 16))
def test_hermitian_eig_contract(seed, n):
    a = random_hermitian(n, np.random.default_rng(seed))
    w, v = hermitian_eig(a)
    assert np.all(np.diff(w) >= 0)
    assert np.abs(a @ v - v * w).max() <= 1e-9
    assert np.abs(v.conj().T @ v - np.eye(n)).max() <= 1e-9
    assert np.abs(a - (v * w) @ v.conj().T).max() <= 1e-10


def test_hermitian_eig_rejects_non_hermitian():
    a = np.array([[1.0, 2.0], [0.0, 1.0]])
    with pytest.raises(ValidationError, match=r"A\[(0,1|1,0)\]"):
        hermitian_eig(a)


def test_is_psd():
    assert is_psd(np.eye(3)) == (True, 1.0)
    flag, lam = is_psd(np.diag([1.0, -0.5]))
    assert not flag and lam == -0.5
    flag, lam = is_psd(partial_transpose(horodecki3(0.5)))
    assert not flag and lam < -1e-3
