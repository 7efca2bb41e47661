"""End-to-end acceptance: each criterion prints one PASS/FAIL line."""
import pytest

from curvecount.acceptance import CRITERIA, run


@pytest.mark.slow
@pytest.mark.parametrize("cid", [c[0] for c in CRITERIA], ids=[f"criterion-{c[0]}" for c in CRITERIA])
def test_criterion(cid, capsys):
    result = run(cid)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.ok, result.detail
