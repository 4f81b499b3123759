"""Numbered acceptance criteria, each at its stated tolerance and time budget.

Run with ``pytest tests/test_acceptance.py -v`` or directly as a script;
either way one PASS/FAIL line is printed per criterion.
"""

import pytest

from delpezzo import verify

CRITERIA = [
    verify.line_count,
    verify.root_counts,
    verify.duality,
    verify.unimodularity,
    verify.weyl_orders,
    verify.torus_suite,
    verify.ade_classifier,
    verify.regularity_suite,
    verify.jordan_chevalley_suite,
    verify.spectral_suite,
    verify.cameral_suite,
]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"C{i}_{f.__name__}" for i, f in enumerate(CRITERIA, 1)])
def test_criterion(criterion, capsys):
    check = criterion()
    with capsys.disabled():
        print("\n" + check.line())
    assert check.passed, check.detail


if __name__ == "__main__":
    results = [f() for f in CRITERIA]
    for chk in results:
        print(chk.line())
    print(f"{sum(c.passed for c in results)}/{len(results)} criteria passed")
