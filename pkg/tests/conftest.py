import numpy as np
import pytest

from rpsneg import Frame, enumerate_pes, pm_from_dense, pm_from_labels


@pytest.fixture
def frame2():
    return Frame(["A", "B"])


@pytest.fixture
def reference_pm(frame2):
    return pm_from_labels(frame2, {("A",): 0.1, ("B",): 0.7, ("A", "B"): 0.2})


def random_pm(rng, n, sparsity=0.0):
    """Random valid PM over an n-element frame; ``sparsity`` is the chance a coordinate is zeroed."""
    frame = Frame([f"g{k + 1}" for k in range(n)])
    index = enumerate_pes(frame)
    vec = rng.dirichlet(np.ones(index.delta - 1))
    if sparsity:
        vec[rng.random(vec.size) < sparsity] = 0.0
        if vec.sum() == 0.0:
            vec[0] = 1.0
        vec /= vec.sum()
    return pm_from_dense(index, vec)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
