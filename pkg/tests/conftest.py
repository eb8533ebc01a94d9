"""Test configuration and fixtures."""

from pathlib import Path

import numpy as np
import pytest

from pid_truncation.core.observability import reset_observability
from pid_truncation.distributions import DiscreteJointDistribution, save_distribution
from pid_truncation.experiments.config import STRONG_EPS, WEAK_EPS
from pid_truncation.models import MaskPolicy, generate_spec, model_distribution, save_spec


GOLDEN_DIR = Path(__file__).parent / "data"


def pytest_addoption(parser):
    parser.addoption("--update-golden", action="store_true", help="Rewrite golden files under tests/data")


def _without_version_line(text):
    return "".join(line for line in text.splitlines(keepends=True) if not line.startswith("# pid-truncation "))


@pytest.fixture
def golden(request):
    """Compare CSV text with tests/data/<name>, ignoring the version line.

    A missing file is recorded from the current output and the test skipped.
    """
    update = request.config.getoption("--update-golden")

    def check(name, text):
        path = GOLDEN_DIR / name
        if update or not path.exists():
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding="utf-8")
            pytest.skip(f"recorded golden file {path.name}")
        assert _without_version_line(text) == _without_version_line(path.read_text(encoding="utf-8"))

    return check


@pytest.fixture(autouse=True)
def reset_logging():
    """Reset logging configuration before each test."""
    import logging
    # Clear all handlers
    for handler in logging.root.handlers[:]:
        logging.root.removeHandler(handler)
    # Reset to default level
    logging.root.setLevel(logging.WARNING)


@pytest.fixture(autouse=True)
def fresh_observability():
    """Each test gets its own observability backend."""
    reset_observability()
    yield
    reset_observability()


@pytest.fixture
def xor_dist():
    """Y = X1 xor X2 with X1, X2 independent uniform bits."""
    table = np.zeros((2, 2, 2))
    for x1 in range(2):
        for x2 in range(2):
            table[x1, x2, x1 ^ x2] = 0.25
    return DiscreteJointDistribution.from_table(["X1", "X2", "Y"], table)


@pytest.fixture
def xor_with_noise_dist():
    """Y = X1 xor X2 plus an independent uniform bit X3."""
    table = np.zeros((2, 2, 2, 2))
    for x1 in range(2):
        for x2 in range(2):
            for x3 in range(2):
                table[x1, x2, x3, x1 ^ x2] = 0.125
    return DiscreteJointDistribution.from_table(["X1", "X2", "X3", "Y"], table)


@pytest.fixture
def copy_dist():
    """Y = X1 with X2 an independent uniform bit."""
    table = np.zeros((2, 2, 2))
    for x1 in range(2):
        for x2 in range(2):
            table[x1, x2, x1] = 0.25
    return DiscreteJointDistribution.from_table(["X1", "X2", "Y"], table)


@pytest.fixture
def weak_spec():
    return generate_spec(8, *WEAK_EPS, seed=0)


@pytest.fixture
def strong_spec():
    return generate_spec(8, *STRONG_EPS, seed=0, mask=MaskPolicy.EXACTLY_ONE_TARGET)


@pytest.fixture
def weak_model(weak_spec):
    return model_distribution(weak_spec)


@pytest.fixture
def xor_file(tmp_path, xor_dist):
    path = tmp_path / "xor.json"
    save_distribution(xor_dist, path)
    return path


@pytest.fixture
def weak_model_file(tmp_path, weak_spec):
    path = tmp_path / "weak.json"
    save_spec(weak_spec, path)
    return path


def random_distribution(rng: np.random.Generator, n_features: int, max_cardinality: int = 3) -> DiscreteJointDistribution:
    """Dirichlet-random table over features X1.. and a target Y, some cells set to zero."""
    shape = tuple(int(c) for c in rng.integers(2, max_cardinality + 1, size=n_features + 1))
    weights = rng.dirichlet(np.ones(int(np.prod(shape))))
    weights[rng.random(weights.size) < 0.15] = 0.0
    if weights.sum() == 0.0:
        weights[0] = 1.0
    names = [f"X{i}" for i in range(1, n_features + 1)] + ["Y"]
    return DiscreteJointDistribution.from_table(names, (weights / weights.sum()).reshape(shape))
