import pytest
from hypothesis import HealthCheck, settings

from inclurank.formula import sweep_cases

settings.register_profile(
    "deterministic",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("deterministic")


@pytest.fixture(scope="session")
def char0_cases():
    # Shared by the characteristic-0 acceptance checks: one oracle sweep,
    # m <= 10, formula and elimination rank side by side.
    return list(sweep_cases(range(11), [0], include_oracle=True))
