import pytest
from hypothesis import settings

from freycert import random_instances

settings.register_profile("exact", deadline=None, max_examples=200)
settings.load_profile("exact")


@pytest.fixture(scope="session")
def corpus():
    """1200 seeded valid instances covering all five cases."""
    return random_instances(1200, seed=0)
