import pytest

from permsym import _kernels


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # compile the JIT kernels once so timed assertions measure algorithms
    _kernels.warmup()
