import pytest

from pllockin import LoopParams

@pytest.fixture
def pendulum():
    # tau2 = 0: conservative loop, separatrix 2 sqrt(K0/tau1) cos(theta/2)
    return LoopParams(1.0, 1.0, 0.0)

@pytest.fixture
def reference_loop():
    return LoopParams(10.0, 1.0, 0.1)

@pytest.fixture
def unit_damped():
    return LoopParams(1.0, 1.0, 1.0)

@pytest.fixture(params=[(1.0, 1.0, 1.0), (1.0, 1.0, 2.0), (1.0, 1.0, 3.0)], ids=["focus", "degenerate", "node"])
def stable_loop(request):
    return LoopParams(*request.param)
