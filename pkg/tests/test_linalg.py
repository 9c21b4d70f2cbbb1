import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from tripartite_ppt import states
from tripartite_ppt.errors import InvalidInput, NonHermitian
from tripartite_ppt.linalg import (
    hermitian_eigenvalues,
    is_density_matrix,
    kron,
    partial_trace,
    partial_transpose_second,
    require_density,
)
from tripartite_ppt.oracle import oracle_eigenvalues

from conftest import bell_projector

finite = st.floats(min_value=-5, max_value=5, allow_nan=False, allow_infinity=False)


def hermitian_from(parts):
    g = parts[0] + 1j * parts[1]
    return 0.5 * (g + g.conj().T)


def test_identity_eigenvalues():
    np.testing.assert_array_equal(hermitian_eigenvalues(np.eye(4)), [1, 1, 1, 1])


def test_pauli_x_eigenvalues():
    np.testing.assert_allclose(hermitian_eigenvalues([[0, 1], [1, 0]]), [-1, 1], atol=1e-15)


def test_werner_pt_at_x1():
    pt = partial_transpose_second(states.werner_state(1.0))
    np.testing.assert_allclose(hermitian_eigenvalues(pt), [-0.5, 0.5, 0.5, 0.5], atol=1e-10)


def test_non_hermitian_rejected():
    m = np.eye(4, dtype=complex)
    m[0, 1] = 1e-9
    with pytest.raises(NonHermitian):
        hermitian_eigenvalues(m)


def test_tiny_asymmetry_is_symmetrized():
    m = np.diag([0.0, 1.0]).astype(complex)
    m[0, 1] = 1e-13
    w = hermitian_eigenvalues(m)
    assert w.dtype == np.float64
    np.testing.assert_allclose(w, [0, 1], atol=1e-12)


@pytest.mark.parametrize("shape", [(3, 3), (4, 5), (16, 16), (4,)])
def test_bad_shape(shape):
    with pytest.raises(InvalidInput):
        hermitian_eigenvalues(np.zeros(shape))


def test_nan_rejected():
    m = np.eye(4)
    m[2, 2] = np.nan
    with pytest.raises(InvalidInput):
        hermitian_eigenvalues(m)


def test_pt_diagonal_fixed_point():
    d = np.diag([0.1, 0.2, 0.3, 0.4]).astype(complex)
    np.testing.assert_array_equal(partial_transpose_second(d), d)


def test_pt_bell_projector_min_eigenvalue():
    pt = partial_transpose_second(bell_projector())
    lam = hermitian_eigenvalues(pt)[0]
    # char-polynomial oracle: det(x - PT) = (x + 1/2)(x - 1/2)^3
    assert oracle_eigenvalues(pt)[0] == pytest.approx(-0.5, abs=1e-12)
    assert lam == pytest.approx(-0.5, abs=1e-12)


def test_pt_of_product_is_psd():
    s = states.random_product(5)
    rho = np.kron(np.outer(s.a, s.a.conj()), np.outer(s.b, s.b.conj()))
    assert hermitian_eigenvalues(partial_transpose_second(rho))[0] >= -1e-12


def test_partial_trace_maximally_mixed():
    np.testing.assert_allclose(partial_trace(np.eye(8) / 8, "C"), np.eye(4) / 4, atol=0)


def test_partial_trace_ghz():
    expected = np.diag([0.5, 0, 0, 0.5])
    np.testing.assert_allclose(partial_trace(states.ghz(), "C"), expected, atol=1e-15)


def test_partial_trace_product_trace_b():
    s = states.random_product(11)
    rho = states.product_pure(s)
    expected = np.kron(np.outer(s.a, s.a.conj()), np.outer(s.c, s.c.conj()))
    np.testing.assert_allclose(partial_trace(rho, "B"), expected, atol=1e-15)


def test_partial_trace_unknown_subsystem():
    with pytest.raises(InvalidInput):
        partial_trace(np.eye(8) / 8, "D")


def test_kron_examples():
    np.testing.assert_array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))
    np.testing.assert_array_equal(kron(np.diag([1, 0]), np.diag([0, 1])), np.diag([0, 1, 0, 0]))


def test_kron_index_formula(rng):
    x = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    y = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    out = kron(x, y)
    for m in range(2):
        for n in range(2):
            for r in range(2):
                for s in range(2):
                    assert abs(out[2 * m + n, 2 * r + s] - x[m, r] * y[n, s]) <= 1e-15


def test_is_density_matrix_examples():
    assert is_density_matrix(np.eye(4) / 4)
    check = is_density_matrix(np.diag([1, 1, 0, 0]))
    assert not check
    assert check.trace_error == pytest.approx(1.0)
    assert any("trace" in f for f in check.failures)


def test_is_density_matrix_reports_negativity():
    check = is_density_matrix(np.diag([1.5, -0.5, 0, 0]))
    assert not check
    assert check.min_eigenvalue == pytest.approx(-0.5)
    assert any("semidefinite" in f for f in check.failures)


def test_is_density_matrix_reports_hermiticity():
    m = np.eye(4, dtype=complex) / 4
    m[0, 1] = 0.01
    check = is_density_matrix(m)
    assert not check and any("Hermitian" in f for f in check.failures)


def test_require_density_message():
    with pytest.raises(InvalidInput, match="trace"):
        require_density(np.eye(4), 4)


@settings(max_examples=200, deadline=None)
@given(arrays(np.float64, (2, 4, 4), elements=finite))
def test_eigen_sum_and_product(parts):
    h = hermitian_from(parts)
    w = hermitian_eigenvalues(h)
    assert abs(w.sum() - np.trace(h).real) <= 1e-9
    assert abs(np.prod(w) - np.linalg.det(h).real) <= 1e-8 * max(1.0, abs(np.prod(w)))


@settings(max_examples=100, deadline=None)
@given(arrays(np.float64, (2, 4, 4), elements=finite))
def test_pt_is_involution(parts):
    m = parts[0] + 1j * parts[1]
    np.testing.assert_array_equal(partial_transpose_second(partial_transpose_second(m)), m)


@settings(max_examples=100, deadline=None)
@given(
    arrays(np.float64, (4, 8, 8), elements=finite),
    st.floats(-3, 3),
    st.floats(-3, 3),
    st.sampled_from("ABC"),
)
def test_partial_trace_linear(parts, alpha, beta, traced):
    m = parts[0] + 1j * parts[1]
    n = parts[2] + 1j * parts[3]
    lhs = partial_trace(alpha * m + beta * n, traced)
    rhs = alpha * partial_trace(m, traced) + beta * partial_trace(n, traced)
    np.testing.assert_allclose(lhs, rhs, atol=1e-12)
    assert np.trace(partial_trace(m, traced)) == pytest.approx(np.trace(m), abs=1e-12)
