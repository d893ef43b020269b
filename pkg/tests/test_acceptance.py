"""Acceptance gate: every criterion of the self-test suite must pass.

Each test runs one criterion end to end and prints its verdict line, so a
failing run names the broken guarantee directly.
"""

from doubleplane import acceptance


def _check(number: int) -> None:
    result = acceptance.run_criterion(number)
    status = "PASS" if result.passed else "FAIL"
    line = f"criterion {result.number:02d} {result.name}: {status} ({result.detail})"
    print(line)
    assert result.passed, line


def test_criteria_roster():
    assert acceptance.criterion_count() == 10
    assert acceptance.criterion_names() == (
        "component-census",
        "dimension-identity",
        "connectedness",
        "rao-bounds",
        "duality",
        "character-crosscheck",
        "oracle-vs-formulas",
        "specialization",
        "conic-family",
        "liaison-algebra",
    )


def test_criterion_01_component_census():
    _check(1)


def test_criterion_02_dimension_identity():
    _check(2)


def test_criterion_03_connectedness():
    _check(3)


def test_criterion_04_rao_bounds():
    _check(4)


def test_criterion_05_duality():
    _check(5)


def test_criterion_06_character_crosscheck():
    _check(6)


def test_criterion_07_oracle_vs_formulas():
    _check(7)


def test_criterion_08_specialization():
    _check(8)


def test_criterion_09_conic_family():
    _check(9)


def test_criterion_10_liaison_algebra():
    _check(10)
