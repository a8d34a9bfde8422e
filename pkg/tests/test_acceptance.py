"""Acceptance gate: every criterion at its stated budget.

Each test prints its own pass/fail line through the shared runner, so
`pytest -s tests/test_acceptance.py` and `smsquiver check` show the same
report.
"""

import pytest

from smsquiver.acceptance import CRITERIA, run


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA], ids=lambda n: f"criterion-{n}")
def test_criterion(number):
    results = run({number})
    assert len(results) == 1
    result = results[0]
    assert result.passed, f"criterion {number}: {result.detail}"
    assert result.seconds < result.budget


def test_full_run_reports_every_criterion(capsys):
    results = run()
    out = capsys.readouterr().out
    assert len(results) == len(CRITERIA)
    assert all(r.passed for r in results)
    for number, *_ in CRITERIA:
        assert f"criterion {number:2d} [pass]" in out
