"""Acceptance criteria 1-12, one seeded suite each.

Run under pytest, or directly with ``python3 tests/test_acceptance.py`` for a
plain PASS/FAIL table.
"""

import sys

import pytest

from onesided.verify import SUITES, run_suite

BY_CRITERION = sorted(SUITES.items(), key=lambda kv: kv[1][0])


def _line(result) -> str:
    return "%s %2d %-14s %s (%d checks, %.1fs)" % (
        "PASS" if result.passed else "FAIL", result.criterion, result.name, result.title,
        len(result.checks), result.seconds)


@pytest.mark.parametrize("name", [n for n, _ in BY_CRITERION],
                         ids=["criterion%02d-%s" % (c[0], n) for n, c in BY_CRITERION])
def test_criterion(name, capsys):
    result = run_suite(name, seed=0)
    with capsys.disabled():
        print("\n" + _line(result))
    assert result.passed, "\n" + result.text()


def main() -> int:
    results = [run_suite(name, seed=0) for name, _ in BY_CRITERION]
    for r in results:
        print(_line(r))
        if not r.passed:
            print(r.text())
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
