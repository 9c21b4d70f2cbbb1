"""Exit criteria. Each test prints one ``[ACCEPT] PASS|FAIL`` line."""
import numpy as np
import pytest

from tripartite_ppt import states, verify
from tripartite_ppt._backend import BACKEND
from tripartite_ppt.criterion import SPECIAL_KINDS, ReductionKind, entanglement_criterion
from tripartite_ppt.linalg import hermitian_eigenvalues, partial_transpose_second
from tripartite_ppt.oracle import oracle_eigenvalues

from conftest import random_hermitian


@pytest.fixture
def announce(capsys):
    def _announce(number, title, results):
        failed = [r for r in results if not r.passed]
        status = "PASS" if not failed else "FAIL"
        with capsys.disabled():
            print(f"\n[ACCEPT] {status} criterion {number}: {title} ({len(results)} checks, backend={BACKEND})")
            for r in failed:
                print(f"         {r.line()}")
        assert not failed, [r.name for r in failed]

    return _announce


@pytest.fixture(scope="module")
def properties_1000():
    return {r.name.split("/")[1]: r for r in verify.run_property_suite(range(1000))}


def test_criterion_1_ghz(announce):
    results = verify.check_example1()
    report = entanglement_criterion(states.ghz())
    for kind in SPECIAL_KINDS:
        sigma = report.per_reduction[kind].reduction
        oracle = oracle_eigenvalues(partial_transpose_second(sigma))[0]
        results.append(verify.make_check(f"oracle/{kind.value}", [oracle], [-0.5], 1e-10))
    results.append(verify.make_check("verdict", [report.entangled], [1], 0))
    announce(1, "GHZ: ordinary reductions PPT, special reductions equal with PT min -0.5, ENTANGLED", results)


def test_criterion_2_werner(announce):
    grid = [round(0.1 * i, 10) for i in range(11)] + [1 / 3 - 1e-6, 1 / 3 + 1e-6]
    results = verify.check_example2(grid)
    for x in grid:
        expected = x > 1 / 3
        got = entanglement_criterion(states.werner_embedded(x)).entangled
        results.append(verify.make_check(f"x={x!r}/entangled_iff_above_third", [got], [expected], 0))
    announce(2, "Werner family: PT spectrum {(1-3x)/4, (1+x)/4 x3} within 1e-10, ENTANGLED iff x > 1/3", results)


def test_criterion_3_embeddings(announce):
    results = []
    r = states.werner_state(0.9)
    for slot, kind in verify.SLOT_KINDS.items():
        rho = states.embed_bipartite(r, slot)
        report = entanglement_criterion(rho)
        back = report.per_reduction[kind].reduction
        results.append(verify.make_check(f"slot{slot}/round_trip", [np.max(np.abs(back - r))], [0], 1e-14))
        results.append(verify.make_check(f"slot{slot}/witness", [kind in report.witnesses], [1], 0))
    results += verify.check_embeddings(seed=0)
    announce(3, "six embeddings of Werner x=0.9 round-trip within 1e-14 and are witnessed", results)


def test_criterion_4_molecules(announce):
    grid = verify.default_molecule_grid()
    assert len(grid) == 10
    results = verify.check_example3(grid)
    announce(4, "molecule grid: pair-reduction sparsity pattern, negative PT eigenvalue vs oracle, ENTANGLED", results)


def test_criterion_5_upb(announce):
    results = verify.check_counterexample()
    report = entanglement_criterion(states.upb_state())
    results.append(verify.make_check("min_over_six", [min(min(report.min_pt_eigenvalues().values()), 0.0)], [0], 1e-10))
    announce(5, "UPB state: all six reductions PPT, INCONCLUSIVE, Gram = I within 1e-12", results)


def test_criterion_6_soundness(announce, properties_1000):
    r = properties_1000["soundness"]
    assert r.name == "property/soundness/1000_separable"
    announce(6, "1000 separable mixtures (k in 1..8): zero ENTANGLED verdicts", [r])


def test_criterion_7_lemma(announce, properties_1000):
    r = properties_1000["lemma"]
    assert r.observed == [6000.0, 0.0]
    announce(7, "1000 random densities: 6000 reductions valid at tol 1e-10", [r])


def test_criterion_8_proof_machinery(announce):
    results = [
        r
        for r in verify.run_property_suite(range(100))
        if r.name.split("/")[1] in ("pair_decomposition", "pair_weights", "product_factorization")
    ]
    assert len(results) == 3
    announce(8, "100 pure states: pair decomposition < 1e-12; 100 products: factorization < 1e-12", results)


def test_criterion_9_numerics(announce):
    rng = np.random.default_rng(9)
    worst = 0.0
    for _ in range(500):
        h = random_hermitian(rng, 4)
        worst = max(worst, float(np.max(np.abs(hermitian_eigenvalues(h) - oracle_eigenvalues(h)))))
    results = [verify.make_check("jacobi_vs_oracle/500x4x4", [worst], [0], 1e-8)]
    involution = 0
    for _ in range(500):
        m = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        involution += not np.array_equal(partial_transpose_second(partial_transpose_second(m)), m)
    results.append(verify.make_check("pt_involution_exact/500", [involution], [0], 0))
    announce(9, "Jacobi vs char-poly oracle within 1e-8 on 500 Hermitian 4x4; PT exact involution", results)
