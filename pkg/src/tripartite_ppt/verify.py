"""Seeded, named checks for every quantitative claim the package relies on.

Each check returns :class:`CheckResult` objects whose pass/fail is a pure
function of ``observed``, ``expected`` and ``tolerance``. Inequalities are
encoded so that this still holds: "min eigenvalue >= -tol" becomes the
negative part ``min(lambda, 0)`` compared with ``0``; yes/no outcomes become
0/1 indicators compared at tolerance 0.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import asdict, dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .criterion import (
    DEFAULT_TOL,
    SPECIAL_KINDS,
    ReductionKind,
    entanglement_criterion,
    ppt_min_eigenvalue,
    product_factorization,
    pure_pair_decomposition,
    reduce,
    special_reduction,
)
from .errors import LemmaViolation
from .linalg import hermitian_eigenvalues, is_density_matrix, partial_transpose_second
from .oracle import oracle_eigenvalues
from .states import (
    MoleculeParams,
    embed_bipartite,
    ghz,
    molecule_state,
    product_pure,
    pure_to_density,
    random_bipartite_density,
    random_density,
    random_product,
    random_pure,
    random_separable,
    upb_state,
    upb_vectors,
    werner_embedded,
    werner_state,
)

SLOT_KINDS = {
    1: ReductionKind.A_BC,
    2: ReductionKind.B_CA,
    3: ReductionKind.C_AB,
    4: ReductionKind.AB,
    5: ReductionKind.AC,
    6: ReductionKind.BC,
}
PAIR_KINDS = {"AB": ReductionKind.AB, "AC": ReductionKind.AC, "BC": ReductionKind.BC}

DEFAULT_X_GRID = tuple(round(0.1 * i, 10) for i in range(11)) + (1 / 3 - 1e-6, 1 / 3 + 1e-6)
EMBED_WERNER_X = 0.9


def default_molecule_grid() -> list[MoleculeParams]:
    levels = (0.0, 0.25, 1 / 3, 0.5, 1.0)
    grid = []
    for p in itertools.product(levels, repeat=3):
        if abs(sum(p) - 1.0) <= 1e-12:
            grid.append(MoleculeParams(*p))
    return grid


@dataclass
class CheckResult:
    name: str
    passed: bool
    observed: list
    expected: list
    tolerance: float
    seed: Optional[int] = None
    note: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        err = _max_err(self.observed, self.expected)
        seed = "" if self.seed is None else f" seed={self.seed}"
        return f"{status}  {self.name}  max_err={err:.3e} tol={self.tolerance:.1e}{seed}"

    def to_dict(self) -> dict:
        return asdict(self)


def _max_err(observed, expected) -> float:
    if len(observed) != len(expected):
        return math.inf
    if not observed:
        return 0.0
    return max(abs(o - e) for o, e in zip(observed, expected))


def make_check(name, observed, expected, tolerance, *, seed=None, spectrum=False, note=""):
    obs = [float(v) for v in observed]
    exp = [float(v) for v in expected]
    if spectrum:
        obs.sort()
        exp.sort()
    passed = _max_err(obs, exp) <= tolerance
    return CheckResult(name, bool(passed), obs, exp, float(tolerance), seed, note)


def _indicator(flag: bool) -> float:
    return 1.0 if flag else 0.0


def _witness_vector(report) -> list[float]:
    return [_indicator(k in report.witnesses) for k in ReductionKind]


def _maxabs(m) -> float:
    return float(np.max(np.abs(m)))


def _bell_projector() -> np.ndarray:
    v = np.zeros(4, dtype=np.complex128)
    v[0] = v[3] = 1 / np.sqrt(2)
    return np.outer(v, v.conj())


def check_example1() -> list[CheckResult]:
    rho = ghz()
    report = entanglement_criterion(rho)
    res = report.per_reduction
    out = []
    classical = np.diag([0.5, 0, 0, 0.5]).astype(np.complex128)
    for kind in (ReductionKind.AB, ReductionKind.AC, ReductionKind.BC):
        out.append(make_check(f"example1/{kind.value}/equals_diag", [_maxabs(res[kind].reduction - classical)], [0], 1e-14))
        out.append(make_check(f"example1/{kind.value}/min_pt_eig", [res[kind].min_pt_eigenvalue], [0.0], 1e-10))
    specials = [res[k].reduction for k in SPECIAL_KINDS]
    diffs = [_maxabs(x - y) for x, y in itertools.combinations(specials, 2)]
    out.append(make_check("example1/special_pairwise_equal", diffs, [0, 0, 0], 1e-14))
    bell = _bell_projector()
    for kind in SPECIAL_KINDS:
        sigma = res[kind].reduction
        lam = res[kind].min_pt_eigenvalue
        out.append(make_check(f"example1/{kind.value}/equals_bell", [_maxabs(sigma - bell)], [0], 1e-14))
        out.append(make_check(f"example1/{kind.value}/min_pt_eig", [lam], [-0.5], 1e-10))
        oracle = oracle_eigenvalues(partial_transpose_second(sigma))[0]
        out.append(make_check(f"example1/{kind.value}/min_pt_eig_vs_oracle", [lam], [oracle], 1e-8))
    expected = [_indicator(k.is_special) for k in ReductionKind]
    out.append(make_check("example1/verdict_witnesses", _witness_vector(report), expected, 0))
    return out


def werner_pt_spectrum(x: float) -> list[float]:
    return [0.25 * (1 - 3 * x)] + [0.25 * (1 + x)] * 3


def check_example2(x_grid: Sequence[float] = DEFAULT_X_GRID, tol: float = DEFAULT_TOL) -> list[CheckResult]:
    out = []
    for x in x_grid:
        rho = werner_embedded(x)
        report = entanglement_criterion(rho, tol)
        sigma = report.per_reduction[ReductionKind.A_BC].reduction
        tag = f"example2/x={x:.9g}"
        out.append(make_check(f"{tag}/a-bc_equals_werner", [_maxabs(sigma - werner_state(x))], [0], 1e-14))
        spectrum = hermitian_eigenvalues(partial_transpose_second(sigma))
        out.append(make_check(f"{tag}/pt_spectrum", spectrum, werner_pt_spectrum(x), 1e-10, spectrum=True))
        should = 0.25 * (1 - 3 * x) < -tol
        out.append(make_check(f"{tag}/verdict", [_indicator(report.entangled)], [_indicator(should)], 0))
    return out


def check_embeddings(seed: int = 0, tol: float = DEFAULT_TOL) -> list[CheckResult]:
    out = []
    werner = werner_state(EMBED_WERNER_X)
    rand = random_bipartite_density(seed)
    rand_entangled = ppt_min_eigenvalue(rand) < -tol
    maximally_mixed = np.eye(4, dtype=np.complex128) / 4
    for slot, kind in SLOT_KINDS.items():
        for label, r, entangled in (
            ("werner", werner, True),
            ("random", rand, rand_entangled),
            ("mixed", maximally_mixed, False),
        ):
            rho = embed_bipartite(r, slot)
            tag = f"embed/slot{slot}/{label}"
            s = seed if label == "random" else None
            back = reduce(rho, kind)
            out.append(make_check(f"{tag}/round_trip_{kind.value}", [_maxabs(back - r)], [0], 1e-14, seed=s))
            report = entanglement_criterion(rho, tol)
            if entangled:
                out.append(make_check(f"{tag}/witness_{kind.value}", [_indicator(kind in report.witnesses)], [1], 0, seed=s))
            else:
                out.append(make_check(f"{tag}/inconclusive", [_indicator(report.entangled)], [0], 0, seed=s))
    return out


_MOLECULE_ZERO = np.ones((4, 4), dtype=bool)
_MOLECULE_ZERO[0, 0] = _MOLECULE_ZERO[1, 1] = _MOLECULE_ZERO[2, 2] = False
_MOLECULE_ZERO[1, 2] = _MOLECULE_ZERO[2, 1] = False


def check_example3(p_grid: Optional[Iterable[MoleculeParams]] = None, tol: float = DEFAULT_TOL) -> list[CheckResult]:
    out = []
    for p in p_grid if p_grid is not None else default_molecule_grid():
        rho = molecule_state(p)
        report = entanglement_criterion(rho, tol)
        tag = f"example3/p=({p.p_ab:.4g},{p.p_bc:.4g},{p.p_ac:.4g})"
        negative = []
        for pair, kind in PAIR_KINDS.items():
            sigma = report.per_reduction[kind].reduction
            w = p.weight(pair)
            out.append(make_check(f"{tag}/{kind.value}/zero_pattern", [_maxabs(sigma[_MOLECULE_ZERO])], [0], 1e-14))
            out.append(make_check(f"{tag}/{kind.value}/coherence", [sigma[1, 2].real, sigma[1, 2].imag, sigma[2, 1].real, sigma[2, 1].imag], [0.5 * w, 0, 0.5 * w, 0], 1e-14))
            lam = report.per_reduction[kind].min_pt_eigenvalue
            oracle = oracle_eigenvalues(partial_transpose_second(sigma))[0]
            out.append(make_check(f"{tag}/{kind.value}/min_pt_eig_vs_oracle", [lam], [oracle], 1e-8))
            if w > 0:
                out.append(make_check(f"{tag}/{kind.value}/pt_negative", [_indicator(lam < -tol)], [1], 0))
            negative.append(lam < -tol)
        out.append(make_check(f"{tag}/some_pair_negative", [_indicator(any(negative))], [1], 0))
        out.append(make_check(f"{tag}/verdict", [_indicator(report.entangled)], [1], 0))
    return out


def check_counterexample(tol: float = DEFAULT_TOL) -> list[CheckResult]:
    vecs = upb_vectors()
    gram = vecs.conj() @ vecs.T
    out = [make_check("upb/gram_identity", [_maxabs(gram - np.eye(4))], [0], 1e-12)]
    rho = upb_state()
    check = is_density_matrix(rho)
    out.append(make_check("upb/is_density", [_indicator(bool(check))], [1], 0, note=check.describe()))
    report = entanglement_criterion(rho, tol)
    for kind, res in report.per_reduction.items():
        out.append(make_check(f"upb/{kind.value}/pt_negative_part", [min(res.min_pt_eigenvalue, 0.0)], [0], 1e-10))
    out.append(
        make_check(
            "upb/verdict_inconclusive",
            [_indicator(report.entangled)],
            [0],
            0,
            note="state is entangled (bound entanglement) yet every reduction is PPT",
        )
    )
    return out


def run_property_suite(seeds: Iterable[int] = range(1000), tol: float = DEFAULT_TOL) -> list[CheckResult]:
    seeds = list(seeds)
    n = len(seeds)
    false_positives = 0
    invalid = 0
    valid = 0
    lin_err = 0.0
    eq6_err = 0.0
    eq6_wsum = 0.0
    eq8_err = 0.0
    for seed in seeds:
        ens, rho = random_separable(seed, 1 + seed % 8)
        if entanglement_criterion(rho, tol).entangled:
            false_positives += 1
        parts = [product_pure(s) for _, s in ens.terms]
        for kind in ReductionKind:
            whole = reduce(rho, kind, check=False)
            summed = sum(w * reduce(r, kind, check=False) for w, r in zip(ens.weights, parts))
            lin_err = max(lin_err, _maxabs(whole - summed))

        dens = random_density(seed)
        for kind in ReductionKind:
            try:
                sigma = reduce(dens, kind, check=False)
            except LemmaViolation:
                invalid += 1
                continue
            if is_density_matrix(sigma, 1e-10):
                valid += 1
            else:
                invalid += 1

        psi = random_pure(seed)
        full = pure_to_density(psi)
        prod = random_product(seed)
        prod_rho = product_pure(prod)
        for kind in SPECIAL_KINDS:
            dec = pure_pair_decomposition(psi, kind)
            eq6_err = max(eq6_err, _maxabs(dec.reconstruct() - special_reduction(full, kind, check=False)))
            eq6_wsum = max(eq6_wsum, abs(dec.weight_plain + dec.weight_flipped - 1.0))
            eq8_err = max(eq8_err, _maxabs(special_reduction(prod_rho, kind, check=False) - product_factorization(prod, kind)))

    return [
        make_check(f"property/soundness/{n}_separable", [false_positives], [0], 0),
        make_check(f"property/lemma/{6 * n}_reductions_valid", [valid, invalid], [6 * n, 0], 0),
        make_check(f"property/linearity/{n}_mixtures", [lin_err], [0], 1e-13),
        make_check(f"property/pair_decomposition/{n}_pure", [eq6_err], [0], 1e-12),
        make_check(f"property/pair_weights/{n}_pure", [eq6_wsum], [0], 1e-12),
        make_check(f"property/product_factorization/{n}_products", [eq8_err], [0], 1e-12),
    ]


def run_all(n_seeds: int = 1000, embed_seed: int = 0) -> list[CheckResult]:
    return (
        check_example1()
        + check_example2()
        + check_embeddings(embed_seed)
        + check_example3()
        + check_counterexample()
        + run_property_suite(range(n_seeds))
    )


def summarize(results: Sequence[CheckResult]) -> dict:
    failed = [r.name for r in results if not r.passed]
    return {
        "total": len(results),
        "passed": len(results) - len(failed),
        "failed": failed,
        "all_passed": not failed,
        "checks": [r.to_dict() for r in results],
    }
