"""Acceptance suite: one named target per criterion, exact Laurent equality throughout.

Each test prints a single PASS/FAIL line (visible without ``-s``) and then
asserts the outcome, so a failing criterion is reported as a failing test.
"""

import pytest

from hallcanon.acceptance import TARGETS, run_target


@pytest.mark.parametrize("target", TARGETS, ids=[t.key for t in TARGETS])
def test_acceptance(target, capsys):
    ok, detail, seconds = run_target(target)
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'} {target.key} [{target.title}] ({seconds:.1f}s): {detail}")
    assert ok, detail
