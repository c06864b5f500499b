from functools import lru_cache

import numpy as np
import pytest

from lissa import LissajousParams, build_node_set

# (n, p) pairs used across the suite; all valid
SMALL_PARAMS = [(2, 1), (3, 1), (5, 1), (2, 3), (4, 3), (3, 5)]
SEED = 20140926


@lru_cache(maxsize=None)
def nodes_for(n, p):
    return build_node_set(LissajousParams(n, p))


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


_RESULTS_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_RESULTS_KEY] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line and fail the test if it did not pass."""
    results = request.config.stash[_RESULTS_KEY]

    def record(label, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] {label}" + (f": {detail}" if detail else "")
        results.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_RESULTS_KEY, [])
    if results:
        terminalreporter.section("acceptance criteria")
        for line in results:
            terminalreporter.write_line(line)
