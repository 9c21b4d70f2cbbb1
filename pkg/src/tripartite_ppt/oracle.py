"""Independent eigenvalue oracle used to cross-check the Jacobi solver.

Nothing here touches the kernels: the characteristic polynomial comes from
the Faddeev-LeVerrier recursion and its roots from Laguerre iteration with
repeated polynomial deflation, each root polished by Newton steps on the
undeflated polynomial.
"""
from __future__ import annotations

import numpy as np


def charpoly(m) -> np.ndarray:
    """Coefficients of ``det(lambda*I - M)``, highest degree first (numpy order)."""
    a = np.asarray(m, dtype=np.complex128)
    n = a.shape[0]
    coeffs = np.zeros(n + 1, dtype=np.complex128)
    coeffs[0] = 1.0
    acc = np.zeros_like(a)
    eye = np.eye(n, dtype=np.complex128)
    for k in range(1, n + 1):
        acc = a @ acc + coeffs[k - 1] * eye
        coeffs[k] = -np.trace(a @ acc) / k
    return coeffs


def _horner(coeffs, x):
    p = coeffs[0]
    dp = 0j
    d2p = 0j
    for c in coeffs[1:]:
        d2p = d2p * x + dp
        dp = dp * x + p
        p = p * x + c
    return p, dp, 2.0 * d2p


def _laguerre(coeffs, x, max_iter=200):
    n = len(coeffs) - 1
    for _ in range(max_iter):
        p, dp, d2p = _horner(coeffs, x)
        if p == 0:
            return x
        g = dp / p
        h = g * g - d2p / p
        root = np.sqrt((n - 1) * (n * h - g * g))
        d1, d2 = g + root, g - root
        d = d1 if abs(d1) >= abs(d2) else d2
        step = n / d if d != 0 else 1e-3 * (1 + abs(x))
        x = x - step
        if abs(step) <= 1e-16 * max(1.0, abs(x)):
            break
    return x


def _deflate(coeffs, root):
    out = np.empty(len(coeffs) - 1, dtype=np.complex128)
    acc = 0j
    for i, c in enumerate(coeffs[:-1]):
        acc = acc * root + c
        out[i] = acc
    return out


def _polish(coeffs, x, steps=3):
    for _ in range(steps):
        p, dp, _ = _horner(coeffs, x)
        if dp == 0:
            break
        nxt = x - p / dp
        if abs(_horner(coeffs, nxt)[0]) >= abs(p):
            break
        x = nxt
    return x


def polynomial_real_roots(coeffs) -> np.ndarray:
    """Roots of a real-rooted polynomial, ascending; imaginary residue is dropped."""
    full = np.asarray(coeffs, dtype=np.complex128)
    work = full.copy()
    roots = []
    while len(work) > 1:
        r = _laguerre(work, 0j)
        r = _polish(full, r)
        roots.append(r.real)
        work = _deflate(work, r)
    return np.sort(np.array(roots))


def oracle_eigenvalues(m) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix via its characteristic polynomial."""
    a = np.asarray(m, dtype=np.complex128)
    h = 0.5 * (a + a.conj().T)
    coeffs = charpoly(h)
    # Hermitian => real coefficients up to rounding
    return polynomial_real_roots(coeffs.real)
