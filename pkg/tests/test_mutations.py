"""Mutation completeness: every axiom check can fire, and pinpoints its axiom.

For each of the fifteen axiom families the suite carries one single-entry
perturbation of a valid algebra.  The report must (a) name the target family
as its first failure in canonical check order, and (b) reproduce the frozen
set of failing tags exactly.  Where the target admits a mutant that breaks
no other family at all, that stronger isolation is asserted too.
"""

import pytest

from mutants import build_mutants
from tfalgebra.verify import TAG_FAMILIES, tag_family, verify

MUTANTS = build_mutants()


def test_suite_covers_all_families():
    assert sorted(m.target for m in MUTANTS) == sorted(TAG_FAMILIES)
    assert len(MUTANTS) == 15


@pytest.mark.parametrize("mutant", MUTANTS, ids=[m.target for m in MUTANTS])
def test_base_is_valid(mutant):
    report = verify(mutant.base)
    assert report.passed, report.failing_tags()


@pytest.mark.parametrize("mutant", MUTANTS, ids=[m.target for m in MUTANTS])
def test_mutant_first_failure_is_target(mutant):
    report = verify(mutant.mutated)
    assert not report.passed
    first = report.first_failure()
    assert first is not None
    assert tag_family(first.tag) == mutant.target
    assert first.witness is not None or first.detail


@pytest.mark.parametrize("mutant", MUTANTS, ids=[m.target for m in MUTANTS])
def test_mutant_failing_set_is_frozen(mutant):
    report = verify(mutant.mutated)
    assert tuple(report.failing_tags()) == mutant.expected_failing


@pytest.mark.parametrize(
    "mutant", [m for m in MUTANTS if m.strong], ids=[m.target for m in MUTANTS if m.strong]
)
def test_strong_mutants_fail_only_their_family(mutant):
    report = verify(mutant.mutated)
    assert report.failing_families() == [mutant.target]


def test_ten_mutants_are_strong():
    # the conjugation-law families are provably entangled with later
    # consequences for any single-entry perturbation; the other ten isolate
    assert sum(1 for m in MUTANTS if m.strong) == 10
    entangled = {m.target for m in MUTANTS if not m.strong}
    assert entangled == {"phi-fix", "phi-unit", "phi-commute", "phi-isometry", "phi-compose"}
