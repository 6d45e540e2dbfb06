import pytest
from hypothesis import settings

from setoidkan.corpus import default_corpus

settings.register_profile("suite", max_examples=40, deadline=None)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def C():
    return default_corpus()
