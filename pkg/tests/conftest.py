import pytest

import helpers

ACCEPTANCE = {}


@pytest.fixture
def example2_af():
    return helpers.example2()


@pytest.fixture
def disease_fixture():
    return helpers.disease()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k.split()[0][1:])):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}  {detail}")
