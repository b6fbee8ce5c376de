import pytest

from realtypes import Poly, validate_sign_matrix

# family x + 1, 2x + 1, x^2 - 1 with roots -1, -1/2, 1
SAMPLE_ROWS = [
    [-1, 0, 1, 1, 1, 1, 1],
    [-1, -1, -1, 0, 1, 1, 1],
    [1, 0, -1, -1, -1, 0, 1],
]
SAMPLE_TYPE = [1, 0, -1, 0, -1, 0, 1]


@pytest.fixture
def sample_matrix():
    return validate_sign_matrix(SAMPLE_ROWS)


@pytest.fixture
def sample_family():
    return [Poly([1, 1]), Poly([1, 2]), Poly([-1, 0, 1])]


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
