import pytest

from qlattice.families import make_dual_hahn, make_q_racah, make_racah

# criterion number -> (passed, detail), filled by test_acceptance
ACCEPTANCE: dict = {}


@pytest.fixture(scope="session")
def dual_hahn():
    return make_dual_hahn(0.3, 10.3, 0.2)


@pytest.fixture(scope="session", params=[0.4, 0.7], ids=["q0.4", "q0.7"])
def q_racah(request):
    return make_q_racah(8, 0.3, 0.5, 0.2, request.param)


@pytest.fixture(scope="session")
def racah():
    return make_racah(8, 0.3, 0.5, 0.2)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"CRITERION {k}: {'PASS' if ok else 'FAIL'}  {detail}")
