import math

import numpy as np
import pytest

from spinent import PureState

S2, S3, S5, S6 = math.sqrt(2), math.sqrt(3), math.sqrt(5), math.sqrt(6)


def make(terms, d, n):
    """State from ``{ket_string: amplitude}``."""
    amps = np.zeros(d**n, dtype=complex)
    for ket, a in terms.items():
        amps[np.ravel_multi_index(tuple(int(c) for c in ket), (d,) * n)] = a
    return PureState(amps, (d,) * n)


@pytest.fixture
def bell():
    return make({"01": 1 / S2, "10": 1 / S2}, 2, 2)


@pytest.fixture
def plus_plus():
    return make({"00": 0.5, "01": 0.5, "10": 0.5, "11": 0.5}, 2, 2)


@pytest.fixture
def example1():
    return make({"00": 0.5, "11": S3 / 2}, 2, 2)


@pytest.fixture
def example2():
    return make({"011": 1 / S5, "100": 2 / S5}, 2, 3)


@pytest.fixture
def qutrit_ghz():
    return make({"00": 1 / S3, "11": 1 / S3, "22": 1 / S3}, 3, 2)


@pytest.fixture
def repeated_eig():
    return make({"00": 1 / S3, "11": 1 / S2, "20": 1 / S6}, 3, 2)


@pytest.fixture
def separable_qutrit():
    return make({"10": 1 / S3, "11": 1 / S3, "12": 1 / S3}, 3, 2)


@pytest.fixture
def rng():
    return np.random.default_rng(20261018)


# ---- acceptance reporting: one PASS/FAIL line per criterion ----

_criteria: dict[int, dict] = {}
_nodes: dict[str, int] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion n")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            n, text = m.args
            _criteria.setdefault(n, {"text": text, "ok": True, "ran": False})
            _nodes[item.nodeid] = n


def pytest_runtest_logreport(report):
    n = _nodes.get(report.nodeid)
    if n is None or (report.when != "call" and not report.failed):
        return
    _criteria[n]["ran"] = True
    if report.failed:
        _criteria[n]["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        info = _criteria[n]
        status = "PASS" if info["ok"] and info["ran"] else ("FAIL" if info["ran"] else "NOT RUN")
        terminalreporter.write_line(f"criterion {n:2d}: {status}  {info['text']}")
