# conftest.py
"""
Shared fixtures for the psigroup test suite.
"""
import logging

import pytest
from hypothesis import settings as hypothesis_settings

from psigroup.groups.families import alternating, dicyclic, dihedral, symmetric
from psigroup.harness.corpus import builtin_corpus

hypothesis_settings.register_profile("psigroup", deadline=None)
hypothesis_settings.load_profile("psigroup")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long exhaustive sweeps (still run by default)")


@pytest.fixture(autouse=True)
def quiet_logging(caplog):
    caplog.set_level(logging.WARNING, logger="psigroup")


@pytest.fixture(scope="session")
def catalog_corpus():
    """Every catalog group of order at most 16."""
    return builtin_corpus()


@pytest.fixture(scope="session")
def small_corpus():
    return builtin_corpus(8)


@pytest.fixture
def s3():
    return symmetric(3)


@pytest.fixture
def s4():
    return symmetric(4)


@pytest.fixture(scope="session")
def a5():
    return alternating(5)


@pytest.fixture
def d8():
    return dihedral(8)


@pytest.fixture
def q8():
    return dicyclic(8)
