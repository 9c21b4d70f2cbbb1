"""Dense complex kernel for matrices of dimension 2, 4 and 8.

Basis conventions are fixed throughout the package: row index ``4i+2j+k``
for ``|i_A j_B k_C>`` and ``2m+n`` for a bipartite ``|m_X n_Y>``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .errors import ConvergenceError, InvalidInput, NonHermitian

HERMITIAN_TOL = 1e-12
PSD_TOL = 1e-10

SUBSYSTEMS = ("A", "B", "C")
_ALLOWED_DIMS = (2, 4, 8)


def as_square(m, dims=_ALLOWED_DIMS) -> np.ndarray:
    """Return ``m`` as a C-contiguous complex128 square array, checking shape and finiteness."""
    a = np.ascontiguousarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] not in dims:
        raise InvalidInput(f"expected a square matrix of dimension in {dims}, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise InvalidInput("matrix has non-finite entries")
    return a


def hermiticity_error(m) -> float:
    a = np.asarray(m)
    return float(np.max(np.abs(a - a.conj().T)))


def _eigvalsh_symmetrized(a: np.ndarray) -> np.ndarray:
    h = 0.5 * (a + a.conj().T)
    w, sweeps = kernels.eigvalsh(h)
    if sweeps < 0:
        raise ConvergenceError("Jacobi iteration did not converge within 100 sweeps")
    return w


def hermitian_eigenvalues(m, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Ascending eigenvalues of a Hermitian matrix via cyclic Jacobi rotations.

    The input is symmetrized as ``(M + M^H)/2`` before solving. Raises
    :class:`NonHermitian` if any entry of ``M - M^H`` exceeds ``tol``.
    """
    a = as_square(m)
    err = hermiticity_error(a)
    if err > tol:
        raise NonHermitian(f"matrix is not Hermitian: max |M - M^H| = {err:.3e} > {tol:.1e}")
    return _eigvalsh_symmetrized(a)


def partial_transpose_second(m) -> np.ndarray:
    """Transpose on the second tensor factor: ``out[2m+n, 2r+s] = in[2m+s, 2r+n]``."""
    return kernels.partial_transpose_second(as_square(m, (4,)))


def partial_trace(rho, traced: str) -> np.ndarray:
    """Trace out one qubit (``"A"``, ``"B"`` or ``"C"``) of an 8x8 matrix.

    The remaining two qubits keep their A, B, C order in the 4x4 result.
    Only the shape is checked; this is linear on arbitrary 8x8 matrices.
    """
    try:
        code = SUBSYSTEMS.index(traced)
    except ValueError:
        raise InvalidInput(f"traced subsystem must be one of {SUBSYSTEMS}, got {traced!r}") from None
    return kernels.partial_trace(as_square(rho, (8,)), code)


def kron(x, y) -> np.ndarray:
    """``out[2m+n, 2r+s] = X[m, r] * Y[n, s]`` for two 2x2 matrices."""
    return np.kron(as_square(x, (2,)), as_square(y, (2,)))


@dataclass(frozen=True)
class DensityCheck:
    """Outcome of :func:`is_density_matrix`; truthy iff every check passed."""

    ok: bool
    dim: int
    hermitian_error: float
    trace_error: float
    min_eigenvalue: float
    failures: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return f"valid {self.dim}x{self.dim} density matrix"
        return "; ".join(self.failures)


def is_density_matrix(m, tol: float = PSD_TOL) -> DensityCheck:
    a = as_square(m)
    n = a.shape[0]
    herm = hermiticity_error(a)
    tr = np.trace(a)
    trace_err = float(abs(tr - 1.0))
    min_eig = float(_eigvalsh_symmetrized(a)[0])

    failures = []
    if herm > tol:
        failures.append(f"not Hermitian: max |M - M^H| = {herm:.3e} exceeds {tol:.1e}")
    if trace_err > tol:
        failures.append(f"trace {tr.real:.12g}{tr.imag:+.3g}j differs from 1 by {trace_err:.3e}")
    if min_eig < -tol:
        failures.append(f"not positive semidefinite: min eigenvalue {min_eig:.3e} below {-tol:.1e}")
    return DensityCheck(not failures, n, herm, trace_err, min_eig, tuple(failures))


def require_density(m, dim: int, tol: float = PSD_TOL) -> np.ndarray:
    """Validate ``m`` as a ``dim``-dimensional density matrix or raise :class:`InvalidInput`."""
    a = as_square(m, (dim,))
    check = is_density_matrix(a, tol)
    if not check:
        raise InvalidInput(f"not a valid {dim}x{dim} density matrix: {check.describe()}")
    return a
