"""Acceptance criteria, one test per criterion; each prints a single PASS/FAIL line."""

import pytest

from howe3 import acceptance as acc


def _report(capsys, res):
    with capsys.disabled():
        print("\n" + res.line())
    assert res.passed, res.line()


def test_criterion_01_table(capsys):
    _report(capsys, acc.check_table())


def test_criterion_02_maximality(capsys):
    _report(capsys, acc.check_maximality())


def test_criterion_03_structured_equals_brute(capsys):
    _report(capsys, acc.check_oracle((11, 13, 17, 19, 23)))


@pytest.mark.slow
def test_criterion_03_slow_tier_p31(capsys):
    _report(capsys, acc.check_oracle((31,)))


def test_criterion_04_supersingular_roots(capsys):
    _report(capsys, acc.check_deuring_roots())


def test_criterion_05_x8_minus_1(capsys):
    _report(capsys, acc.check_x8_minus_1())


def test_criterion_06_inverse_map(capsys):
    _report(capsys, acc.check_inverse_map())


def test_criterion_07_hyperelliptic(capsys):
    _report(capsys, acc.check_hyperelliptic())


def test_criterion_08_superspecial_tests(capsys):
    _report(capsys, acc.check_superspecial_tests())


def test_criterion_09_twists(capsys):
    _report(capsys, acc.check_twists(slow=False))


@pytest.mark.slow
def test_criterion_09_slow_tier_twists(capsys):
    _report(capsys, acc.check_twists(slow=True))


def test_criterion_10_hasse_weil_abort(capsys):
    _report(capsys, acc.check_hasse_weil_abort())
