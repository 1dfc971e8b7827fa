import pytest

from nillab.experiments import ExperimentConfig, run_experiment

_CACHE = {}


@pytest.fixture(scope="session")
def report_for():
    """Memoized experiment runner shared by all test modules."""

    def get(m, gens=2, seed=1, bound=10):
        key = (m, gens, seed, bound)
        if key not in _CACHE:
            _CACHE[key] = run_experiment(
                ExperimentConfig(
                    m=m, generator_count=gens, seed=seed, entry_bound=bound
                )
            )
        return _CACHE[key]

    return get
