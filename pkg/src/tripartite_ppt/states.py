"""Constructors for the tripartite qubit states used throughout the package.

All 8x8 outputs use the row index ``4i+2j+k`` for ``|i_A j_B k_C>``.

Random samplers draw from numpy's PCG64 generator, seeded through a
``SeedSequence([seed, stream])`` where ``stream`` is a fixed tag per sampler,
so the same integer seed gives independent draws for different families and
the exact same draw on every run.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InvalidInput, InvalidSlot, NotNormalized, ParamOutOfRange
from .linalg import as_square, require_density

NORM_TOL = 1e-12
MAX_ENSEMBLE = 64

_KET = (np.array([1.0, 0.0], dtype=np.complex128), np.array([0.0, 1.0], dtype=np.complex128))
_PLUS = (_KET[0] + _KET[1]) / np.sqrt(2.0)
_MINUS = (_KET[0] - _KET[1]) / np.sqrt(2.0)

_STREAM_DENSITY = 1
_STREAM_SEPARABLE = 2
_STREAM_PURE = 3
_STREAM_PRODUCT = 4
_STREAM_BIPARTITE = 5


def basis_index(i: int, j: int, k: int) -> int:
    return 4 * i + 2 * j + k


def product_ket(a, b, c) -> np.ndarray:
    return np.kron(np.kron(a, b), c)


def pure_to_density(psi) -> np.ndarray:
    """Projector ``|psi><psi|`` for a normalized 8-amplitude vector."""
    v = np.asarray(psi, dtype=np.complex128)
    if v.shape != (8,):
        raise InvalidInput(f"expected 8 amplitudes, got shape {v.shape}")
    norm2 = float(np.sum(np.abs(v) ** 2))
    if abs(norm2 - 1.0) > NORM_TOL:
        raise NotNormalized(f"sum |c_ijk|^2 = {norm2!r}, expected 1")
    return np.outer(v, v.conj())


def ghz() -> np.ndarray:
    phi = np.zeros(8, dtype=np.complex128)
    phi[0] = phi[7] = 1.0 / np.sqrt(2.0)
    return np.outer(phi, phi.conj())


def singlet_projector() -> np.ndarray:
    """Two-qubit singlet projector: +1/2 at (01,01), (10,10); -1/2 at (01,10), (10,01)."""
    s = np.zeros((4, 4), dtype=np.complex128)
    s[1, 1] = s[2, 2] = 0.5
    s[1, 2] = s[2, 1] = -0.5
    return s


def werner_state(x: float) -> np.ndarray:
    """Two-qubit Werner state ``x*S + (1-x)/4 * I`` with ``S`` the singlet projector."""
    _check_unit(x, "x")
    return x * singlet_projector() + 0.25 * (1.0 - x) * np.eye(4, dtype=np.complex128)


def werner_r() -> np.ndarray:
    """The 8x8 rank-one matrix mixed with white noise in :func:`werner_embedded`."""
    r = np.zeros((8, 8), dtype=np.complex128)
    for u in (0b010, 0b011, 0b100, 0b101):
        r[u, u] = 0.25
    # Hermitian reading of the off-diagonal list; see README "Conventions"
    for u, v in ((0b010, 0b101), (0b011, 0b100), (0b100, 0b011), (0b101, 0b010)):
        r[u, v] = -0.25
    return r


def werner_embedded(x: float) -> np.ndarray:
    _check_unit(x, "x")
    return x * werner_r() + (1.0 - x) / 8.0 * np.eye(8, dtype=np.complex128)


def _slot_indices(slot: int):
    """For each bipartite pair (i, j), the two tripartite indices it is copied to."""
    maps = {
        1: lambda i, j: ((i, j, j), (i, j, 1 - j)),
        2: lambda i, j: ((j, i, j), (1 - j, i, j)),
        3: lambda i, j: ((j, j, i), (j, 1 - j, i)),
        4: lambda i, j: ((i, j, 0), (i, j, 1)),
        5: lambda i, j: ((i, 0, j), (i, 1, j)),
        6: lambda i, j: ((0, i, j), (1, i, j)),
    }
    if slot not in maps:
        raise InvalidSlot(f"slot must be an integer in 1..6, got {slot!r}")
    f = maps[slot]
    first = [basis_index(*f(i, j)[0]) for i in (0, 1) for j in (0, 1)]
    second = [basis_index(*f(i, j)[1]) for i in (0, 1) for j in (0, 1)]
    return first, second


def embed_bipartite(r, slot: int) -> np.ndarray:
    """Lift a two-qubit density matrix into an 8x8 state through one of six embeddings.

    Slots 1-3 are undone by the special reductions A|BC, B|CA, C|AB and slots
    4-6 by the partial traces over C, B, A respectively.
    """
    first, second = _slot_indices(slot)
    try:
        r = require_density(r, 4)
    except InvalidInput as exc:
        raise InvalidInput(f"embedding input rejected: {exc}") from None
    rho = np.zeros((8, 8), dtype=np.complex128)
    half = 0.5 * r
    rho[np.ix_(first, first)] += half
    rho[np.ix_(second, second)] += half
    return rho


@dataclass(frozen=True)
class MoleculeParams:
    p_ab: float
    p_bc: float
    p_ac: float

    def __post_init__(self):
        for name in ("p_ab", "p_bc", "p_ac"):
            _check_unit(getattr(self, name), name)
        total = self.p_ab + self.p_bc + self.p_ac
        if abs(total - 1.0) > NORM_TOL:
            raise ParamOutOfRange(f"molecule weights must sum to 1, got {total!r}")

    def weight(self, pair: str) -> float:
        return {"AB": self.p_ab, "BC": self.p_bc, "AC": self.p_ac}[pair]


def molecule_pair_state(pair: str) -> np.ndarray:
    """``(|0_r 1_s> + |1_r 0_s>)/sqrt(2)`` on qubits ``pair`` with the remaining qubit in |0>."""
    slots = {"AB": (0, 1), "BC": (1, 2), "AC": (0, 2)}[pair]
    out = np.zeros(8, dtype=np.complex128)
    for bits in ((0, 1), (1, 0)):
        q = [0, 0, 0]
        q[slots[0]], q[slots[1]] = bits
        out[basis_index(*q)] = 1.0 / np.sqrt(2.0)
    return out


def molecule_state(p: MoleculeParams) -> np.ndarray:
    rho = np.zeros((8, 8), dtype=np.complex128)
    for pair in ("AB", "BC", "AC"):
        w = p.weight(pair)
        if w:
            v = molecule_pair_state(pair)
            rho += w * np.outer(v, v.conj())
    return rho


def upb_vectors() -> np.ndarray:
    """The four orthonormal product vectors of the three-qubit "Shifts" UPB, one per row."""
    return np.array(
        [
            product_ket(_KET[0], _KET[1], _PLUS),
            product_ket(_KET[1], _PLUS, _KET[0]),
            product_ket(_PLUS, _KET[0], _KET[1]),
            product_ket(_MINUS, _MINUS, _MINUS),
        ]
    )


def upb_state() -> np.ndarray:
    vecs = upb_vectors()
    proj = sum(np.outer(v, v.conj()) for v in vecs)
    return 0.25 * (np.eye(8, dtype=np.complex128) - proj)


@dataclass(frozen=True)
class ProductPureState:
    """Single-qubit amplitudes ``a``, ``b``, ``c`` of ``Psi_A (x) Psi_B (x) Psi_C``."""

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray

    def __post_init__(self):
        for name in ("a", "b", "c"):
            v = np.asarray(getattr(self, name), dtype=np.complex128)
            if v.shape != (2,):
                raise InvalidInput(f"factor {name} must have 2 amplitudes, got shape {v.shape}")
            norm2 = float(np.sum(np.abs(v) ** 2))
            if abs(norm2 - 1.0) > NORM_TOL:
                raise NotNormalized(f"factor {name} has squared norm {norm2!r}")
            object.__setattr__(self, name, v)

    def vector(self) -> np.ndarray:
        return product_ket(self.a, self.b, self.c)


def product_pure(s: ProductPureState) -> np.ndarray:
    pa = np.outer(s.a, s.a.conj())
    pb = np.outer(s.b, s.b.conj())
    pc = np.outer(s.c, s.c.conj())
    return np.kron(np.kron(pa, pb), pc)


@dataclass(frozen=True)
class SeparableEnsemble:
    terms: tuple[tuple[float, ProductPureState], ...]

    def __post_init__(self):
        if not self.terms:
            raise InvalidInput("an ensemble needs at least one term")
        weights = [w for w, _ in self.terms]
        if min(weights) < 0:
            raise ParamOutOfRange("ensemble weights must be non-negative")
        if abs(sum(weights) - 1.0) > NORM_TOL:
            raise ParamOutOfRange(f"ensemble weights sum to {sum(weights)!r}, expected 1")

    @property
    def weights(self) -> list[float]:
        return [w for w, _ in self.terms]

    def density(self) -> np.ndarray:
        rho = np.zeros((8, 8), dtype=np.complex128)
        for w, s in self.terms:
            rho += w * product_pure(s)
        return rho


def _rng(seed: int, stream: int) -> np.random.Generator:
    if int(seed) != seed or seed < 0:
        raise ParamOutOfRange(f"seed must be a non-negative integer, got {seed!r}")
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([int(seed), stream])))


def _complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def _haar_qubit(rng: np.random.Generator) -> np.ndarray:
    v = _complex_gaussian(rng, 2)
    return v / np.linalg.norm(v)


def _random_product(rng: np.random.Generator) -> ProductPureState:
    return ProductPureState(_haar_qubit(rng), _haar_qubit(rng), _haar_qubit(rng))


def random_product(seed: int) -> ProductPureState:
    return _random_product(_rng(seed, _STREAM_PRODUCT))


def random_pure(seed: int) -> np.ndarray:
    """Haar-random normalized 8-amplitude vector."""
    v = _complex_gaussian(_rng(seed, _STREAM_PURE), 8)
    return v / np.linalg.norm(v)


def random_separable(seed: int, k: int) -> tuple[SeparableEnsemble, np.ndarray]:
    """``k`` Haar product states with flat-Dirichlet weights, and their mixture."""
    if int(k) != k or not 1 <= k <= MAX_ENSEMBLE:
        raise ParamOutOfRange(f"k must be an integer in 1..{MAX_ENSEMBLE}, got {k!r}")
    rng = _rng(seed, _STREAM_SEPARABLE)
    e = rng.standard_exponential(k)
    weights = e / e.sum()
    ens = SeparableEnsemble(tuple((float(w), _random_product(rng)) for w in weights))
    return ens, ens.density()


def random_bipartite_density(seed: int) -> np.ndarray:
    """Random two-qubit state ``G G^H / tr(G G^H)`` with ``G`` 4x4 complex Gaussian."""
    g = _complex_gaussian(_rng(seed, _STREAM_BIPARTITE), (4, 4))
    m = g @ g.conj().T
    m = 0.5 * (m + m.conj().T)
    return m / np.trace(m).real


def random_density(seed: int) -> np.ndarray:
    """``G G^H / tr(G G^H)`` for an 8x8 matrix ``G`` of standard complex Gaussians."""
    g = _complex_gaussian(_rng(seed, _STREAM_DENSITY), (8, 8))
    m = g @ g.conj().T
    m = 0.5 * (m + m.conj().T)
    return m / np.trace(m).real


def _check_unit(value, name: str) -> None:
    if not (0.0 <= value <= 1.0):
        raise ParamOutOfRange(f"{name} must lie in [0, 1], got {value!r}")


def mixture(weights: Sequence[float], states: Sequence[np.ndarray]) -> np.ndarray:
    """Convex combination ``sum_k w_k rho_k`` of 8x8 matrices."""
    if len(weights) != len(states):
        raise InvalidInput("weights and states differ in length")
    out = np.zeros((8, 8), dtype=np.complex128)
    for w, s in zip(weights, states):
        out += w * as_square(s, (8,))
    return out


__all__ = [
    "MAX_ENSEMBLE",
    "MoleculeParams",
    "NORM_TOL",
    "ProductPureState",
    "SeparableEnsemble",
    "basis_index",
    "embed_bipartite",
    "ghz",
    "mixture",
    "molecule_pair_state",
    "molecule_state",
    "product_ket",
    "product_pure",
    "pure_to_density",
    "random_bipartite_density",
    "random_density",
    "random_product",
    "random_pure",
    "random_separable",
    "singlet_projector",
    "upb_state",
    "upb_vectors",
    "werner_embedded",
    "werner_r",
    "werner_state",
]
