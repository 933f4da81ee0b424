import pytest

from quasisym.config import VerifierConfig
from quasisym.fqsym import HomogeneousElement, TruncatedSeries
from quasisym.permcore import PartSet, all_permutations, compositions_with_parts


class Helpers:
    @staticmethod
    def element(basis, terms, degree=None):
        '''Builds an element from {perm tuple: coeff}.'''
        if degree is None:
            degree = len(next(iter(terms)))
        return HomogeneousElement(basis, degree, terms)

    @staticmethod
    def series(basis, parts):
        '''Builds a series from a list of {perm tuple: coeff}, one per degree.'''
        return TruncatedSeries([HomogeneousElement(basis, d, terms) for d, terms in enumerate(parts)])

    @staticmethod
    def compositions(n):
        return compositions_with_parts(PartSet('all'), n)

    @staticmethod
    def permutations(n):
        return [tuple(p) for p in all_permutations(n)]


@pytest.fixture(scope="session")
def helpers():
    return Helpers


@pytest.fixture
def small_config():
    return VerifierConfig(config_dict={
        'max_degree': 3,
        'output': 'json',
        'timing': False
    }, use_env=False)
