"""Shared fixtures: catalog instances and their full evaluations.

Both fixtures are session-scoped because evaluating every catalog entry
(census, closure, cross-checks) costs a few seconds and many test modules
share the results read-only.
"""

import pytest

from quasigalois import catalog


@pytest.fixture(scope="session")
def instances():
    return {name: catalog.make(name) for name in catalog.entry_names()}


@pytest.fixture(scope="session")
def evaluations(instances):
    return {name: catalog.evaluate(inst) for name, inst in instances.items()}
