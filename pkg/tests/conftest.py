import pytest

from biform import kernels

KERNEL_NAMES = ("fiber_count", "fiber_region_sum", "brute_count", "conic_count", "param_inner",
                "linear_box_count", "quadratic_box_count", "mixed_box_count", "conic_search")
BACKENDS = kernels.available()


@pytest.fixture(params=sorted(BACKENDS))
def backend(request, monkeypatch):
    """Route every kernel call through one backend module."""
    mod = BACKENDS[request.param]
    for name in KERNEL_NAMES:
        monkeypatch.setattr(kernels, name, getattr(mod, name))
    return request.param


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
