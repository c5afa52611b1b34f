import pytest

from exconim import sg_table_n2


@pytest.fixture(scope="session")
def table_3_32_512():
    return sg_table_n2(3, 32, 512)


@pytest.fixture(scope="session")
def table_small():
    return sg_table_n2(4, 20, 40)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import report_lines
    except ImportError:
        return
    lines = report_lines()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
