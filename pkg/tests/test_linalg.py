import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from relspin.linalg import (
    I2,
    SIGMA_Y,
    NotPSDError,
    hermitian_eig,
    make_density,
    partial_trace_first,
    psd_sqrt,
    tensor_product,
    validate_density,
)
from relspin.states import SpinOrientation, bell_states

from conftest import random_density, random_hermitian


def _charpoly_roots(m):
    """Eigenvalues from Faddeev-LeVerrier coefficients and a polynomial root finder."""
    n = m.shape[0]
    coeffs = [1.0 + 0j]
    mk = np.zeros_like(m)
    for k in range(1, n + 1):
        mk = m @ mk + coeffs[-1] * np.eye(n)
        coeffs.append(-np.trace(m @ mk) / k)
    return np.sort(np.roots(coeffs).real)[::-1]


def _ptrace_loops(m):
    out = np.zeros((2, 2), dtype=complex)
    for j in range(2):
        for k in range(2):
            for i in range(2):
                out[j, k] += m[2 * i + j, 2 * i + k]
    return out


def test_tensor_identity():
    np.testing.assert_array_equal(tensor_product(I2, I2), np.eye(4))


def test_tensor_basis_vectors():
    np.testing.assert_array_equal(tensor_product([1, 0], [0, 1]), [0, 1, 0, 0])


def test_sigma_y_squared_tensor_is_identity():
    yy = tensor_product(SIGMA_Y, SIGMA_Y)
    np.testing.assert_array_equal(yy @ yy, np.eye(4))


def test_tensor_associative_for_integer_matrices(rng):
    a, b, c = (rng.integers(-5, 6, size=(2, 2)) for _ in range(3))
    left = tensor_product(tensor_product(a, b), c)
    right = tensor_product(a, tensor_product(b, c))
    np.testing.assert_array_equal(left, right)


def test_partial_trace_of_bell_projector_is_maximally_mixed():
    psi1 = bell_states(SpinOrientation(0.0))[0]
    np.testing.assert_allclose(partial_trace_first(make_density(psi1)), I2 / 2, atol=1e-15)


def test_partial_trace_of_product_state():
    n = np.array([0.6, 0.8j])
    rho = tensor_product(np.diag([1, 0]), np.outer(n, n.conj()))
    np.testing.assert_allclose(partial_trace_first(rho), np.outer(n, n.conj()), atol=1e-15)


def test_partial_trace_matches_direct_summation(rng):
    for _ in range(20):
        rho = random_density(rng)
        red = partial_trace_first(rho)
        np.testing.assert_allclose(red, _ptrace_loops(rho), atol=1e-15)
        assert abs(np.trace(red) - np.trace(rho)) < 1e-14


def test_partial_trace_of_tensor_product(rng):
    for _ in range(50):
        a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        b = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        np.testing.assert_allclose(partial_trace_first(tensor_product(a, b)), np.trace(a) * b, atol=1e-12)


def test_partial_trace_rejects_wrong_shape():
    with pytest.raises(ValueError):
        partial_trace_first(np.eye(3))


def test_eig_sigma_y():
    w, _ = hermitian_eig(SIGMA_Y)
    np.testing.assert_allclose(w, [1, -1], atol=1e-15)


def test_eig_diagonal_sorted():
    w, _ = hermitian_eig(np.diag([0.1, 0.7, 0.1, 0.1]))
    np.testing.assert_allclose(w, [0.7, 0.1, 0.1, 0.1], atol=1e-15)


def test_eig_matches_characteristic_polynomial(rng):
    for _ in range(50):
        m = random_hermitian(rng)
        w, v = hermitian_eig(m)
        np.testing.assert_allclose(w, _charpoly_roots(m), atol=1e-9)
        assert np.abs((v * w) @ v.conj().T - m).max() < 1e-10
        assert abs(w.sum() - np.trace(m).real) < 1e-10


def test_eig_rejects_non_square():
    with pytest.raises(ValueError):
        hermitian_eig(np.zeros((2, 3)))


def test_eig_rejects_non_hermitian():
    with pytest.raises(ValueError):
        hermitian_eig(np.array([[0, 1], [0, 0]]))


def test_psd_sqrt_examples():
    np.testing.assert_allclose(psd_sqrt(np.eye(4)), np.eye(4), atol=1e-15)
    np.testing.assert_allclose(psd_sqrt(np.diag([4.0, 1.0, 0.0, 0.0])), np.diag([2.0, 1.0, 0.0, 0.0]), atol=1e-15)


def test_psd_sqrt_reconstructs(rng):
    for _ in range(100):
        m = random_density(rng) * rng.uniform(0.1, 10.0)
        s = psd_sqrt(m)
        assert np.abs(s @ s - m).max() < 1e-9
        assert np.abs(s - s.conj().T).max() < 1e-15
        assert hermitian_eig(s)[0][-1] >= 0.0


def test_psd_sqrt_clamps_roundoff_negatives():
    s = psd_sqrt(np.diag([1.0, -1e-11]))
    np.testing.assert_allclose(s, np.diag([1.0, 0.0]), atol=1e-15)


def test_psd_sqrt_rejects_negative():
    with pytest.raises(NotPSDError):
        psd_sqrt(np.diag([1.0, -1e-6]))


def test_make_density_invariants(rng):
    for _ in range(20):
        kets = rng.normal(size=(3, 4)) + 1j * rng.normal(size=(3, 4))
        rho = make_density(kets, rng.dirichlet(np.ones(3)))
        assert abs(np.trace(rho) - 1) < 1e-12
        assert hermitian_eig(rho)[0][-1] >= -1e-12


def test_validate_density_rejects_bad_trace():
    with pytest.raises(ValueError, match="trace"):
        validate_density(np.eye(2))


complex_entries = st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False)


@settings(max_examples=100, deadline=None)
@given(arrays(np.complex128, (4, 4), elements=complex_entries))
def test_psd_sqrt_property(a):
    m = a @ a.conj().T
    s = psd_sqrt(m)
    assert np.abs(s @ s - m).max() < 1e-9 * max(1.0, np.abs(m).max())
