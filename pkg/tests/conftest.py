import pytest

from helpers import experiment_dumps
from profilelink import ingest_dumps


@pytest.fixture(scope="session")
def experiment_graph():
    return ingest_dumps(experiment_dumps())
