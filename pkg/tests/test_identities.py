"""Tests for the exact and randomized identity suites."""

import pytest

from weierstrass import identities

from weierstrass.identities import (
    EXACT_IDENTITIES,
    FAILS,
    HOLDS,
    HOLDS_UP_TO_SIGN,
    SECANT,
    TANGENT,
    VERTICAL,
    ExactIdentity,
    b2,
    b4,
    b6,
    b8,
    check_cross_engine,
    check_exact_suite,
    check_identity,
    check_randomized_suite,
    discriminant,
    run_trial,
    trial_rng,
    w_poly,
    x,
    y,
)
from weierstrass.poly import UniPoly
from weierstrass.zpoly import ZMultiPoly

MERSENNE = 2 ** 31 - 1


class TestExactSuite:
    """Tests for identities checked by exact expansion."""

    def test_all_hold(self):
        reports = check_exact_suite()
        assert [r.identity for r in reports] == list(EXACT_IDENTITIES)
        assert all(r.passed for r in reports)

    def test_sign_of_tangent_identity(self):
        """The W_X identity only holds with its left side negated."""
        statuses = {r.identity: r.status for r in check_exact_suite()}
        assert statuses.pop("I2") == HOLDS_UP_TO_SIGN
        assert set(statuses.values()) == {HOLDS}

    def test_residuals_are_zero(self):
        for report in check_exact_suite():
            assert report.residual.is_zero()

    def test_failing_identity(self):
        broken = ExactIdentity("bad", "W(x, y) = W(x, y) + 1", lambda: w_poly(x, y), lambda: w_poly(x, y) + 1)
        report = check_identity(broken)
        assert report.status == FAILS
        assert not report.passed
        assert report.residual == -1
        assert report.failures == 1

    def test_signed_identity_still_fails(self):
        broken = ExactIdentity("bad", "x = y", lambda: x, lambda: y, signed=True)
        assert check_identity(broken).status == FAILS

    def test_b_relation(self):
        assert (4 * b8() - (b2() * b6() - b4() ** 2)).is_zero()

    def test_discriminant_degree(self):
        assert discriminant().total_degree == 12

    def test_to_dict(self):
        report = check_identity(EXACT_IDENTITIES["I0"])
        data = report.to_dict()
        assert data["identity"] == "I0"
        assert data["status"] == HOLDS
        assert data["residual"] == "0"
        assert data["seed"] is None


class TestRandomizedSuite:
    """Tests for the on-curve identities over GF(p)."""

    def test_trial_rng_is_deterministic(self):
        assert trial_rng(1729, 3).random() == trial_rng(1729, 3).random()
        assert trial_rng(1729, 3).random() != trial_rng(1729, 4).random()

    def test_run_trial_is_deterministic(self):
        first, second = run_trial(MERSENNE, 1729, 0), run_trial(MERSENNE, 1729, 0)
        assert first.context == second.context
        assert first.case == second.case

    def test_trial_cases(self):
        assert run_trial(MERSENNE, 1729, 0).case in (SECANT, VERTICAL)
        assert run_trial(MERSENNE, 1729, 1).case in (TANGENT, VERTICAL)

    def test_run_trial_residuals(self):
        outcome = run_trial(MERSENNE, 7, 2)
        if outcome.case != VERTICAL:
            assert set(outcome.residuals) == {"R1", "R2", "R3"}
            assert all(isinstance(r, UniPoly) for r in outcome.residuals.values())
            assert all(r.is_zero() for r in outcome.residuals.values())

    def test_small_field_trials(self):
        """Over GF(101) vertical pairs occur but every non-vertical trial passes."""
        for trial in range(40):
            outcome = run_trial(101, 1729, trial)
            assert all(r.is_zero() for r in outcome.residuals.values()), outcome.context

    def test_suite_passes(self):
        reports = check_randomized_suite(MERSENNE, trials=20, seed=1729)
        assert [r.identity for r in reports] == ["R1", "R2", "R3"]
        assert all(r.status == HOLDS for r in reports)
        assert all(r.seed == 1729 and r.trials == 20 for r in reports)
        assert "secant=" in reports[0].note
        assert all(isinstance(r.residual, UniPoly) and r.residual.is_zero() for r in reports)

    @pytest.mark.slow
    def test_suite_with_workers(self):
        serial = check_randomized_suite(MERSENNE, trials=200, seed=11)
        parallel = check_randomized_suite(MERSENNE, trials=200, seed=11, workers=2)
        assert [r.to_dict() for r in serial] == [r.to_dict() for r in parallel]


class TestCrossEngine:
    """Symbolic specialization against direct field evaluation."""

    @pytest.mark.parametrize("p", [2, 5, 101, MERSENNE])
    def test_agrees(self, p):
        report = check_cross_engine(p, samples=25, seed=1729)
        assert report.identity == "cross-engine"
        assert report.status == HOLDS
        assert report.trials == 25

    def test_residual_is_zero_poly(self):
        assert check_cross_engine(7, samples=5, seed=1).residual == ZMultiPoly()

    def test_covers_exact_identities(self):
        report = check_cross_engine(101, samples=10, seed=3)
        for name in list(EXACT_IDENTITIES) + ["W(X, lambda)", "delta"]:
            assert name in report.note

    def test_broken_identity_is_caught(self, monkeypatch):
        broken = ExactIdentity("bad", "W(x, y) = W(x, y) + 1", lambda: w_poly(x, y), lambda: w_poly(x, y) + 1)
        monkeypatch.setitem(identities.EXACT_IDENTITIES, "bad", broken)
        report = check_cross_engine(101, samples=5, seed=3)
        assert report.status == FAILS
        assert report.failures == 5
        assert report.counterexample.startswith("bad at ")
        assert report.residual == ZMultiPoly.const(100)

    def test_signed_identity_accepts_negated_side(self, monkeypatch):
        flipped = ExactIdentity("flip", "x = -x up to sign", lambda: x, lambda: -x, signed=True)
        monkeypatch.setitem(identities.EXACT_IDENTITIES, "flip", flipped)
        assert check_cross_engine(101, samples=5, seed=3).status == HOLDS
