import numpy as np
import pytest

from coherence_bounds.checks import (
    SUITE_NAMES,
    generate_cases,
    run_checks,
)


def test_generate_cases_is_deterministic():
    a = generate_cases(5, 10)
    b = generate_cases(5, 10)
    assert len(a) == 10
    for ca, cb in zip(a, b):
        assert ca.state_seed == cb.state_seed
        assert ca.theta_x == cb.theta_x and ca.phi_z == cb.phi_z
        assert np.array_equal(ca.rho.matrix, cb.rho.matrix)


def test_generate_cases_angles_in_range():
    for case in generate_cases(6, 50):
        for theta in (case.theta_x, case.theta_z):
            assert 0.0 <= theta <= np.pi
        for phi in (case.phi_x, case.phi_z):
            assert 0.0 <= phi < 2 * np.pi


def test_all_suites_pass_on_small_corpus():
    result = run_checks(7, 40)
    assert result.ok
    assert tuple(s.name for s in result.suites) == SUITE_NAMES
    for suite in result.suites:
        assert suite.total > 0
        assert suite.passed == suite.total
        assert not suite.violations


def test_corruption_hook_breaks_exactly_one_suite():
    result = run_checks(7, 12, corrupt="entropy")
    assert not result.ok
    by_name = {s.name: s for s in result.suites}
    assert by_name["entropy"].passed < by_name["entropy"].total
    for name in SUITE_NAMES:
        if name != "entropy":
            assert by_name[name].passed == by_name[name].total
    violation = by_name["entropy"].violations[0]
    text = violation.describe()
    assert "entropy" in text
    assert "margin" in text
    assert str(violation.state_seed) in text


def test_unknown_corruption_target_rejected():
    with pytest.raises(ValueError):
        run_checks(7, 5, corrupt="nonsense")
