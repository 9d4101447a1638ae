"""Acceptance gate: every contract criterion runs at its stated tolerance.

Each case prints one PASS line (visible with -v or -s); a failure carries
the criterion's own diagnosis.
"""

import pytest

from dnagraph.acceptance import CRITERIA


@pytest.mark.parametrize("criterion", CRITERIA, ids=[c.ident for c in CRITERIA])
def test_criterion(criterion):
    detail = criterion.run()
    print(f"PASS {criterion.ident}: {criterion.summary} ({detail})")


def test_run_all_reports_success(capsys):
    from dnagraph import acceptance

    assert acceptance.run_all()
    out = capsys.readouterr().out
    assert out.count("PASS") == len(CRITERIA)
    assert "FAIL" not in out
