"""Six-reduction PPT entanglement criterion for three-qubit density matrices.

A separable three-qubit state has six separable two-qubit reductions: the
three partial traces and the three "special" reductions A|BC, B|CA, C|AB.
For two qubits PPT is equivalent to separability, so a negative
partial-transpose eigenvalue in any of the six certifies that the full state
is entangled. The converse does not hold (see :func:`~tripartite_ppt.states.upb_state`),
hence the only verdicts are ENTANGLED and INCONCLUSIVE.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ._backend import kernels
from .errors import InvalidInput, LemmaViolation, NotNormalized
from .linalg import (
    PSD_TOL,
    _eigvalsh_symmetrized,
    as_square,
    is_density_matrix,
    partial_trace,
    require_density,
)
from .states import NORM_TOL

DEFAULT_TOL = 1e-10


class ReductionKind(enum.Enum):
    AB = "ab"
    AC = "ac"
    BC = "bc"
    A_BC = "a-bc"
    B_CA = "b-ca"
    C_AB = "c-ab"

    @property
    def cli_name(self) -> str:
        return self.value

    @property
    def is_special(self) -> bool:
        return self in _SPECIAL_CODE

    @classmethod
    def parse(cls, name) -> "ReductionKind":
        if isinstance(name, cls):
            return name
        key = str(name).strip()
        for kind in cls:
            if key.lower() == kind.value or key.upper() == kind.name:
                return kind
        raise InvalidInput(
            f"unknown reduction kind {name!r}; expected one of "
            + ", ".join(k.value for k in cls)
        )


_TRACED = {ReductionKind.AB: "C", ReductionKind.AC: "B", ReductionKind.BC: "A"}
_SPECIAL_CODE = {ReductionKind.A_BC: 0, ReductionKind.B_CA: 1, ReductionKind.C_AB: 2}
SPECIAL_KINDS = tuple(_SPECIAL_CODE)


def _prepare(rho, check: bool, tol: float) -> np.ndarray:
    if check:
        return require_density(rho, 8, tol)
    return as_square(rho, (8,))


def special_reduction(rho, kind, *, check: bool = True, tol: float = PSD_TOL) -> np.ndarray:
    """One of the three correlated reductions A|BC, B|CA, C|AB.

    For A|BC, ``out[2i+j, 2r+s] = rho[ijj, rss] + rho[ij(1-j), rs(1-s)]``;
    B|CA and C|AB apply the same pattern with the qubits cycled. The result
    is validated as a density matrix; a failure raises :class:`LemmaViolation`,
    which can only happen when the input itself was not a state.
    """
    kind = ReductionKind.parse(kind)
    if not kind.is_special:
        raise InvalidInput(f"{kind.value} is not a special reduction")
    a = _prepare(rho, check, tol)
    out = kernels.special_reduction(a, _SPECIAL_CODE[kind])
    verdict = is_density_matrix(out, tol)
    if not verdict:
        raise LemmaViolation(f"{kind.value} reduction is not a density matrix: {verdict.describe()}")
    return out


def reduce(rho, kind, *, check: bool = True, tol: float = PSD_TOL) -> np.ndarray:
    kind = ReductionKind.parse(kind)
    if kind.is_special:
        return special_reduction(rho, kind, check=check, tol=tol)
    return partial_trace(_prepare(rho, check, tol), _TRACED[kind])


def _min_pt_eigenvalue(sigma: np.ndarray) -> float:
    return float(_eigvalsh_symmetrized(kernels.partial_transpose_second(sigma))[0])


def ppt_min_eigenvalue(sigma, tol: float = PSD_TOL) -> float:
    """Smallest eigenvalue of the partial transpose of a two-qubit state.

    Negative exactly when ``sigma`` is entangled; the equivalence is specific
    to 2x2 (and 2x3) systems.
    """
    return _min_pt_eigenvalue(require_density(sigma, 4, tol))


class Verdict(enum.Enum):
    ENTANGLED = "ENTANGLED"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class ReductionResult:
    reduction: np.ndarray
    min_pt_eigenvalue: float


@dataclass(frozen=True)
class EntanglementReport:
    per_reduction: dict
    tolerance: float
    witnesses: tuple = field(default=())

    @property
    def verdict(self) -> Verdict:
        return Verdict.ENTANGLED if self.witnesses else Verdict.INCONCLUSIVE

    @property
    def entangled(self) -> bool:
        return bool(self.witnesses)

    def min_pt_eigenvalues(self) -> dict:
        return {k: r.min_pt_eigenvalue for k, r in self.per_reduction.items()}

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "tolerance": self.tolerance,
            "witnesses": [k.cli_name for k in self.witnesses],
            "reductions": [
                {"kind": k.cli_name, "min_pt_eigenvalue": r.min_pt_eigenvalue}
                for k, r in self.per_reduction.items()
            ],
        }


def entanglement_criterion(
    rho, tol: float = DEFAULT_TOL, *, validate_tol: float = PSD_TOL
) -> EntanglementReport:
    """Run the PPT test on all six reductions of ``rho``.

    ``tol`` is the detection threshold: a reduction is a witness when its
    minimum partial-transpose eigenvalue is below ``-tol``. All six are
    always evaluated so the witness list is complete.
    """
    if tol < 0:
        raise InvalidInput("tolerance must be non-negative")
    a = require_density(rho, 8, validate_tol)
    results = {}
    witnesses = []
    for kind in ReductionKind:
        sigma = reduce(a, kind, check=False, tol=validate_tol)
        lam = _min_pt_eigenvalue(sigma)
        results[kind] = ReductionResult(sigma, lam)
        if lam < -tol:
            witnesses.append(kind)
    return EntanglementReport(results, tol, tuple(witnesses))


@dataclass(frozen=True)
class PairDecomposition:
    """``rho_special = weight_plain * state_plain + weight_flipped * state_flipped``.

    A state whose weight is zero is stored as ``None``.
    """

    weight_plain: float
    state_plain: Optional[np.ndarray]
    weight_flipped: float
    state_flipped: Optional[np.ndarray]

    def reconstruct(self) -> np.ndarray:
        out = np.zeros((4, 4), dtype=np.complex128)
        if self.state_plain is not None:
            out += self.weight_plain * self.state_plain
        if self.state_flipped is not None:
            out += self.weight_flipped * self.state_flipped
        return out


def _pair_amplitudes(c: np.ndarray, kind: ReductionKind):
    plain = np.empty(4, dtype=np.complex128)
    flipped = np.empty(4, dtype=np.complex128)
    for m in (0, 1):
        for n in (0, 1):
            if kind is ReductionKind.A_BC:
                p, f = (m, n, n), (m, n, 1 - n)
            elif kind is ReductionKind.B_CA:
                p, f = (n, m, n), (1 - n, m, n)
            else:
                p, f = (n, n, m), (n, 1 - n, m)
            plain[2 * m + n] = c[4 * p[0] + 2 * p[1] + p[2]]
            flipped[2 * m + n] = c[4 * f[0] + 2 * f[1] + f[2]]
    return plain, flipped


def pure_pair_decomposition(psi, kind) -> PairDecomposition:
    """Split a special reduction of a pure state into two weighted pure states.

    The "plain" amplitudes pair the correlated qubits equal (``c_mnn`` for
    A|BC), the "flipped" ones opposite (``c_mn(1-n)``).
    """
    kind = ReductionKind.parse(kind)
    if not kind.is_special:
        raise InvalidInput(f"{kind.value} is not a special reduction")
    c = np.asarray(psi, dtype=np.complex128)
    if c.shape != (8,):
        raise InvalidInput(f"expected 8 amplitudes, got shape {c.shape}")
    norm2 = float(np.sum(np.abs(c) ** 2))
    if abs(norm2 - 1.0) > NORM_TOL:
        raise NotNormalized(f"sum |c_ijk|^2 = {norm2!r}, expected 1")

    parts = []
    for amps in _pair_amplitudes(c, kind):
        w = float(np.sum(np.abs(amps) ** 2))
        if w == 0.0:
            parts.append((0.0, None))
        else:
            phi = amps / np.sqrt(w)
            parts.append((w, np.outer(phi, phi.conj())))
    (wp, sp), (wf, sf) = parts
    return PairDecomposition(wp, sp, wf, sf)


__all__ = [
    "DEFAULT_TOL",
    "EntanglementReport",
    "PairDecomposition",
    "ReductionKind",
    "ReductionResult",
    "SPECIAL_KINDS",
    "Verdict",
    "entanglement_criterion",
    "ppt_min_eigenvalue",
    "product_factorization",
    "pure_pair_decomposition",
    "reduce",
    "special_reduction",
]


def _omega(f: np.ndarray, gamma: float) -> np.ndarray:
    return np.array(
        [
            [abs(f[0]) ** 2, gamma * f[0] * np.conj(f[1])],
            [gamma * np.conj(f[0]) * f[1], abs(f[1]) ** 2],
        ],
        dtype=np.complex128,
    )


def product_factorization(s, kind) -> np.ndarray:
    """Closed form of a special reduction of a product pure state.

    For A|BC this is ``rho_A (x) omega_BC`` where ``omega_BC`` carries the B
    populations and B coherence scaled by ``gamma_C = 2 Re(c0 c1*)``; B|CA and
    C|AB cycle the roles (C scaled by ``gamma_A``, A scaled by ``gamma_B``).
    """
    kind = ReductionKind.parse(kind)
    if kind is ReductionKind.A_BC:
        x, y, z = s.a, s.b, s.c
    elif kind is ReductionKind.B_CA:
        x, y, z = s.b, s.c, s.a
    elif kind is ReductionKind.C_AB:
        x, y, z = s.c, s.a, s.b
    else:
        raise InvalidInput(f"{kind.value} is not a special reduction")
    gamma = 2.0 * float(np.real(z[0] * np.conj(z[1])))
    return np.kron(np.outer(x, np.conj(x)), _omega(y, gamma))
