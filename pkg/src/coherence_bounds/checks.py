"""Randomized invariant suites over seeded two-qubit states and Bloch basis pairs.

Each suite covers one module's invariants. A check is a (name, margin, tol)
triple that passes when margin >= -tol; identity checks use margin = -|error|.
Case generation is fully determined by the run seed, so identical seeds give
identical verdicts.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .bounds import BoundReport, coherence_bound_t1, evaluate_all
from .coherence import coherence_rel, purity_rel, unilateral_coherence, unilateral_purity
from .correlations import _HolevoObjective, classical_correlation, holevo, mutual_information
from .entropy import relative_entropy, von_neumann_entropy
from .linalg import hermitian_eig, hermitize, partial_trace, tensor_product
from .measurement import ObservableBasis, bloch_basis, dephase, incompatibility, measure
from .states import (
    DensityMatrix,
    bell_diagonal_family,
    make_density,
    marginal_a,
    marginal_b,
    random_density,
    random_unitary,
    werner,
    x_state,
)

SUITE_NAMES = ("linalg", "entropy", "states", "measurement", "coherence", "correlations", "bounds")

# Shift applied to every margin of one suite by the --corrupt test hook, so the
# failure reporting path can be exercised deterministically.
CORRUPT_SHIFT = 1e-3

_EIG_DIMS = (2, 3, 4, 6, 8)


@dataclass(frozen=True)
class CheckCase:
    index: int
    state_seed: int
    rho: DensityMatrix
    theta_x: float
    phi_x: float
    theta_z: float
    phi_z: float
    x: ObservableBasis
    z: ObservableBasis


@dataclass(frozen=True)
class Violation:
    suite: str
    state_seed: int
    theta_x: float
    phi_x: float
    theta_z: float
    phi_z: float
    inequality: str
    margin: float

    def describe(self) -> str:
        return (
            f"seed={self.state_seed} "
            f"x=({self.theta_x:.6f},{self.phi_x:.6f}) z=({self.theta_z:.6f},{self.phi_z:.6f}) "
            f"{self.inequality} margin={self.margin:.3e}"
        )


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    total: int = 0
    violations: list[Violation] = field(default_factory=list)


@dataclass
class RunResult:
    seed: int
    cases: int
    suites: list[SuiteResult]

    @property
    def ok(self) -> bool:
        return all(s.passed == s.total for s in self.suites)


def generate_cases(seed: int, count: int) -> list[CheckCase]:
    """Deterministic fuzz corpus: random full-rank two-qubit states and basis pairs."""
    rng = np.random.default_rng(seed)
    cases = []
    for i in range(count):
        state_seed = int(rng.integers(0, 2**31 - 1))
        angles = [
            float(np.arccos(rng.uniform(-1.0, 1.0))),
            float(rng.uniform(0.0, 2.0 * np.pi)),
            float(np.arccos(rng.uniform(-1.0, 1.0))),
            float(rng.uniform(0.0, 2.0 * np.pi)),
        ]
        cases.append(
            CheckCase(
                index=i,
                state_seed=state_seed,
                rho=random_density(2, 2, state_seed),
                theta_x=angles[0],
                phi_x=angles[1],
                theta_z=angles[2],
                phi_z=angles[3],
                x=bloch_basis(angles[0], angles[1]),
                z=bloch_basis(angles[2], angles[3]),
            )
        )
    return cases


def _suite_linalg(case: CheckCase, report: BoundReport) -> list[tuple[str, float, float]]:
    rng = np.random.default_rng((case.state_seed, 1))
    d = _EIG_DIMS[case.index % len(_EIG_DIMS)]
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    h = hermitize(g)
    dec = hermitian_eig(h)
    recon = dec.eigenvectors @ np.diag(dec.eigenvalues) @ dec.eigenvectors.conj().T
    gram = dec.eigenvectors.conj().T @ dec.eigenvectors
    a = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    b = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    prod = marginal_a(case.rho).matrix
    return [
        ("eig_reconstruction", -float(np.max(np.abs(recon - h))), 1e-10),
        ("eig_orthonormal", -float(np.max(np.abs(gram - np.eye(d)))), 1e-10),
        ("eig_descending", float(np.min(np.diff(-dec.eigenvalues))) if d > 1 else 0.0, 1e-12),
        (
            "tensor_trace_multiplicative",
            -abs(np.trace(tensor_product(a, b)) - np.trace(a) * np.trace(b)),
            1e-9,
        ),
        (
            "ptrace_trace_preserved",
            -abs(float(np.trace(partial_trace(case.rho.matrix, 2, 2, "A")).real) - 1.0),
            1e-10,
        ),
        (
            "ptrace_of_product",
            -float(
                np.max(
                    np.abs(
                        partial_trace(tensor_product(prod, marginal_b(case.rho).matrix), 2, 2, "B")
                        - prod
                    )
                )
            ),
            1e-10,
        ),
    ]


def _suite_entropy(case: CheckCase, report: BoundReport) -> list[tuple[str, float, float]]:
    aux_seed = case.state_seed + 1_000_000_007
    sigma = random_density(2, 2, aux_seed)
    u = random_unitary(4, aux_seed)
    rotated = make_density(u @ case.rho.matrix @ u.conj().T, 2, 2)
    rel = relative_entropy(case.rho, sigma)
    deph_rel = relative_entropy(dephase(case.rho, case.x), dephase(sigma, case.x))
    contract = float("inf") if np.isinf(rel) else rel - deph_rel
    return [
        ("klein_nonnegativity", rel, 1e-9),
        ("self_relative_entropy", -abs(relative_entropy(case.rho, case.rho)), 1e-9),
        (
            "unitary_invariance",
            -abs(von_neumann_entropy(rotated) - von_neumann_entropy(case.rho)),
            1e-9,
        ),
        ("dephasing_contractivity", contract, 1e-9),
    ]


def _suite_states(case: CheckCase, report: BoundReport) -> list[tuple[str, float, float]]:
    rng = np.random.default_rng((case.state_seed, 3))
    p = float(rng.uniform())
    built = {"xstate": x_state(p), "bell_diagonal": bell_diagonal_family(p), "werner": werner(p)}
    checks = [
        (f"{name}_unit_trace", -abs(float(np.trace(st.matrix).real) - 1.0), 1e-12)
        for name, st in built.items()
    ]
    checks.append(
        (
            "werner_marginal_maximally_mixed",
            -float(np.max(np.abs(marginal_a(built["werner"]).matrix - np.eye(2) / 2.0))),
            1e-10,
        )
    )
    expected = np.diag([p / 2.0, 1.0 - p / 2.0])
    checks.append(
        (
            "xstate_marginal_closed_form",
            -float(np.max(np.abs(marginal_a(built["xstate"]).matrix - expected))),
            1e-10,
        )
    )
    return checks


def _suite_measurement(case: CheckCase, report: BoundReport) -> list[tuple[str, float, float]]:
    deph = dephase(case.rho, case.x)
    twice = dephase(deph, case.x)
    out = measure(case.rho, case.x)
    rebuilt = np.zeros((4, 4), dtype=np.complex128)
    for y in range(2):
        ket = out.basis.vectors[:, y]
        rebuilt += out.probs[y] * tensor_product(
            np.outer(ket, ket.conj()), out.conditional_states[y].matrix
        )
    q = incompatibility(case.x, case.z)
    return [
        ("dephase_idempotent", -float(np.max(np.abs(twice.matrix - deph.matrix))), 1e-10),
        (
            "dephase_entropy_nondecreasing",
            von_neumann_entropy(deph) - von_neumann_entropy(case.rho),
            1e-9,
        ),
        ("outcome_probs_sum_to_one", -abs(float(out.probs.sum()) - 1.0), 1e-9),
        ("joint_equals_dephased", -float(np.max(np.abs(out.joint_state.matrix - deph.matrix))), 1e-10),
        ("joint_block_decomposition", -float(np.max(np.abs(out.joint_state.matrix - rebuilt))), 1e-10),
        (
            "dephase_commutes_with_marginal",
            -float(np.max(np.abs(marginal_a(deph).matrix - dephase(marginal_a(case.rho), case.x).matrix))),
            1e-10,
        ),
        ("incompatibility_in_range", min(q, 1.0 - q), 1e-9),
    ]


def _suite_coherence(case: CheckCase, report: BoundReport) -> list[tuple[str, float, float]]:
    rho_a = marginal_a(case.rho)
    info = mutual_information(case.rho)
    checks = [
        (
            "purity_decomposition",
            -abs(unilateral_purity(case.rho) - (purity_rel(rho_a) + info)),
            1e-9,
        )
    ]
    for tag, basis in (("x", case.x), ("z", case.z)):
        c_uni = unilateral_coherence(case.rho, basis).value
        c_loc = coherence_rel(rho_a, basis).value
        checks.extend(
            [
                (
                    f"coherence_decomposition_{tag}",
                    -abs(c_uni - (c_loc + info - holevo(case.rho, basis))),
                    1e-9,
                ),
                (f"purity_dominates_coherence_{tag}", purity_rel(rho_a) - c_loc, 1e-9),
                (f"unilateral_purity_dominates_{tag}", unilateral_purity(case.rho) - c_uni, 1e-9),
            ]
        )
    checks.append(
        (
            "coherence_vs_relative_entropy",
            -abs(
                unilateral_coherence(case.rho, case.x).value
                - relative_entropy(case.rho, dephase(case.rho, case.x))
            ),
            1e-8,
        )
    )
    return checks


def _suite_correlations(case: CheckCase, report: BoundReport) -> list[tuple[str, float, float]]:
    info = report.mutual_info
    j_a = (info - report.discord_gap) / 2.0
    d_a = (info + report.discord_gap) / 2.0
    rng = np.random.default_rng((case.state_seed, 5))
    probe_t = np.arccos(rng.uniform(-1.0, 1.0, size=50))
    probe_p = rng.uniform(0.0, 2.0 * np.pi, size=50)
    probe_best = float(np.max(_HolevoObjective(case.rho)(probe_t, probe_p)))
    u = tensor_product(np.eye(2), random_unitary(2, case.state_seed + 77))
    conjugated = make_density(u @ case.rho.matrix @ u.conj().T, 2, 2)
    j_conj = classical_correlation(conjugated).classical_correlation
    return [
        ("classical_correlation_nonnegative", j_a, 1e-9),
        ("classical_correlation_below_mutual_info", info - j_a, 1e-9),
        ("discord_nonnegative", d_a, 1e-9),
        ("holevo_below_mutual_info_x", info - report.holevo_x, 1e-9),
        ("holevo_below_mutual_info_z", info - report.holevo_z, 1e-9),
        ("optimizer_dominates_probes", j_a - probe_best, 1e-9),
        ("classical_correlation_b_unitary_invariant", -abs(j_a - j_conj), 1e-6),
    ]


def _suite_bounds(case: CheckCase, report: BoundReport) -> list[tuple[str, float, float]]:
    lhs_t1, lb_t1 = coherence_bound_t1(marginal_a(case.rho), case.x, case.z)
    return [
        ("lhs_coherence>=lb_theorem2", report.lhs_coherence - report.lb_theorem2, 1e-9),
        ("lhs_coherence>=lb_theorem3", report.lhs_coherence - report.lb_theorem3, 1e-6),
        ("lhs_coherence>=lb_theorem4", report.lhs_coherence - report.lb_theorem4, 1e-9),
        ("ub_holevo>=lhs_coherence", report.ub_holevo - report.lhs_coherence, 1e-9),
        ("ub_purity>=ub_holevo", report.ub_purity - report.ub_holevo, 1e-9),
        ("lhs_eur>=eur_berta", report.lhs_eur - report.eur_berta, 1e-9),
        ("lhs_eur>=eur_pati", report.lhs_eur - report.eur_pati, 1e-6),
        ("lhs_eur>=eur_adabi", report.lhs_eur - report.eur_adabi, 1e-9),
        ("certainty_ub>=lhs_eur", report.certainty_ub - report.lhs_eur, 1e-9),
        (
            "conversion_identity",
            -abs(report.lhs_eur - report.lhs_coherence - 2.0 * report.cond_entropy),
            1e-9,
        ),
        ("monopartite_coherence_bound", lhs_t1 - lb_t1, 1e-9),
    ]


_SUITE_FNS = {
    "linalg": _suite_linalg,
    "entropy": _suite_entropy,
    "states": _suite_states,
    "measurement": _suite_measurement,
    "coherence": _suite_coherence,
    "correlations": _suite_correlations,
    "bounds": _suite_bounds,
}


def run_checks(seed: int, cases: int, corrupt: str | None = None) -> RunResult:
    """Run every suite over `cases` seeded random states.

    `corrupt` names a suite whose margins get shifted by -CORRUPT_SHIFT after
    evaluation; it exists so the failure path has a deterministic trigger.
    """
    if corrupt is not None and corrupt not in SUITE_NAMES:
        raise ValueError(f"unknown suite {corrupt!r}")
    results = {name: SuiteResult(name=name) for name in SUITE_NAMES}
    for case in generate_cases(seed, cases):
        report = evaluate_all(case.rho, case.x, case.z)
        for name in SUITE_NAMES:
            checks = _SUITE_FNS[name](case, report)
            if corrupt == name:
                checks = [(label, margin - CORRUPT_SHIFT, tol) for label, margin, tol in checks]
            suite = results[name]
            suite.total += 1
            bad = [(label, margin) for label, margin, tol in checks if not margin >= -tol]
            if bad:
                label, margin = bad[0]
                suite.violations.append(
                    Violation(
                        suite=name,
                        state_seed=case.state_seed,
                        theta_x=case.theta_x,
                        phi_x=case.phi_x,
                        theta_z=case.theta_z,
                        phi_z=case.phi_z,
                        inequality=label,
                        margin=float(margin),
                    )
                )
            else:
                suite.passed += 1
    return RunResult(seed=seed, cases=cases, suites=[results[name] for name in SUITE_NAMES])
