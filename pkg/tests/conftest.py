import pytest

from builders import star_graph


def pytest_configure(config):
    config.acceptance_lines = []


@pytest.fixture
def acceptance_log(request):
    """Lines appended here are printed in the terminal summary."""
    return request.config.acceptance_lines


@pytest.fixture
def k15():
    return star_graph(5)


def pytest_terminal_summary(terminalreporter, config):
    if config.acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in config.acceptance_lines:
            terminalreporter.write_line(line)
