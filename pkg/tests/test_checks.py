"""Verification-check registry: statuses, determinism, witnesses."""

import pytest

from lamina.core import MatroidError
from lamina.checks import available_checks, run_check

FAST_PASSING = [
    "sec1-pc-example",
    "lem-mnk",
    "lem-therest",
    "lem-obvious",
    "thm-bdm-roundtrip",
    "prop-rank-k1",
    "lem-nb",
    "cor-t2lp",
]


class TestRegistry:
    def test_registry_is_nonempty_and_stable(self):
        ids = available_checks()
        assert len(ids) >= 25
        assert ids == available_checks()

    def test_unknown_check_raises(self):
        with pytest.raises(MatroidError):
            run_check("no-such-check")


class TestResults:
    @pytest.mark.parametrize("check_id", FAST_PASSING)
    def test_fast_checks_pass(self, check_id):
        res = run_check(check_id, seed=0)
        assert res.status == "pass", res.witness
        assert bool(res)
        assert res.elapsed_ms >= 0

    def test_counterexample_family_check_fails_with_witness(self):
        res = run_check("thm-notk-k4")
        assert res.status == "fail"
        assert not bool(res)
        note = res.witness["note"]
        assert "Z3" in note

    def test_determinism_under_seed(self):
        a = run_check("lem-mnk", seed=42)
        b = run_check("lem-mnk", seed=42)
        assert (a.status, a.witness) == (b.status, b.witness)
