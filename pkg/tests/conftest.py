import pytest

from frobcount.corpus import default_corpus
from frobcount.verify import corpus_group


@pytest.fixture(scope="session")
def corpus():
    return default_corpus()


@pytest.fixture(scope="session")
def group():
    return corpus_group
