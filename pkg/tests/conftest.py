from pathlib import Path

import pytest

from vassred import build_b, parse_cm
from vassred.twocm import CmTransition, CounterMachine, Op

MACHINES = Path(__file__).resolve().parent.parent / "machines"


def load(name):
    return parse_cm((MACHINES / name).read_text())


@pytest.fixture(scope="session")
def fig1():
    return load("fig1.2cm")


@pytest.fixture(scope="session")
def loop():
    return load("loop.2cm")


@pytest.fixture(scope="session")
def cheat():
    return load("cheat.2cm")


@pytest.fixture(scope="session")
def fig1_red(fig1):
    return build_b(fig1)


@pytest.fixture(scope="session")
def loop_red(loop):
    return build_b(loop)


@pytest.fixture(scope="session")
def cheat_red(cheat):
    return build_b(cheat)


@pytest.fixture
def machine():
    """Build a machine from ``(source, op, target)`` triples."""
    def make(initial, final, *triples):
        return CounterMachine(initial, final, tuple(CmTransition(s, Op(o), t) for s, o, t in triples))
    return make


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    # expose each phase's report on the item so fixtures can read the outcome
    outcome = yield
    report = outcome.get_result()
    setattr(item, "rep_" + report.when, report)
