import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture
def fresh_cache():
    from immaculate.nsym import TransitionCache

    return TransitionCache(max_degree=8)
