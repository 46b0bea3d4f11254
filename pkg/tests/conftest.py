import numpy as np
import pytest

from frontal_helicoid import load_surface
from frontal_helicoid.curvespec import bundled_names

# Acceptance criteria report one line each at the end of the session.
ACCEPTANCE = {}
CRITERIA = {
    1: "example-5.1 end-to-end classification",
    2: "example-5.2 end-to-end classification",
    3: "determinant identities at 50 random points",
    4: "coefficient tables vs jet oracle",
    5: "cusp classifier on model germs",
    6: "derived theorem cases (3,5) and (2,3)",
    7: "lightcone frame identities",
    8: "basic invariants vs closed form",
    9: "jets vs finite differences",
    10: "byte-identical classification reports",
}


@pytest.fixture
def record():
    def _record(number, passed, detail):
        ACCEPTANCE[number] = (bool(passed), detail)
        return passed
    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n, title in CRITERIA.items():
        if n in ACCEPTANCE:
            ok, detail = ACCEPTANCE[n]
            terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {n:2d}. {title}: {detail}")
        else:
            terminalreporter.write_line(f"[----] {n:2d}. {title}: not run")


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


@pytest.fixture(scope="session")
def ex51():
    return load_surface("example-5.1")


@pytest.fixture(scope="session")
def ex52():
    return load_surface("example-5.2")


@pytest.fixture(scope="session", params=bundled_names())
def bundled(request):
    return load_surface(request.param)
