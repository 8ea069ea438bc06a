import itertools

import numpy as np
import pytest

ACCEPTANCE_LINES = []


def record_acceptance(number, ok, detail=""):
    ACCEPTANCE_LINES.append((number, bool(ok), detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in sorted(ACCEPTANCE_LINES, key=lambda t: t[0]):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_fuzzy(rng, n, k=None, p_crisp=0.2):
    """Random memberships with a share of exact 0 / 1 / 0.5 values to hit the boundary cases."""
    shape = (n,) if k is None else (k, n)
    a = rng.random(shape)
    u = rng.random(shape)
    a = np.where(u < p_crisp / 2, 0.0, a)
    a = np.where((u >= p_crisp / 2) & (u < p_crisp), 1.0, a)
    a = np.where((u >= p_crisp) & (u < p_crisp + 0.05), 0.5, a)
    return a


def crisp_pairs(n):
    for bits_a in itertools.product((0.0, 1.0), repeat=n):
        for bits_b in itertools.product((0.0, 1.0), repeat=n):
            yield np.array(bits_a), np.array(bits_b)


WOWA_EXAMPLE_A = np.array([1.0, 0.2, 0.0, 0.0, 0.0, 0.3])
WOWA_EXAMPLE_B = np.array([1.0, 1.0, 0.0, 0.0, 0.0, 0.0])
