import pytest

from mahlerlat.cli import bundled_corpus
from mahlerlat.fields import classify_Psr


@pytest.fixture(scope="session")
def corpus():
    return bundled_corpus()


@pytest.fixture(scope="session")
def corpus_members(corpus):
    return [e for e in corpus if classify_Psr(e.poly).member]
