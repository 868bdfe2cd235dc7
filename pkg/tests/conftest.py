import pytest

from app.core.factory import Factory
from app.models.tempgraph import AggregatedGraph
from tests.helpers import BARBELL, SMALL_SYNTH, TRIANGLES, graph_from_edges


@pytest.fixture
def factory() -> Factory:
    return Factory()


@pytest.fixture
def ingest_controller(factory):
    return factory.get_ingest_controller()


@pytest.fixture
def tempgraph_controller(factory):
    return factory.get_tempgraph_controller()


@pytest.fixture
def classify_controller(factory):
    return factory.get_classify_controller()


@pytest.fixture
def filter_controller(factory):
    return factory.get_filter_controller()


@pytest.fixture
def detect_controller(factory):
    return factory.get_detect_controller()


@pytest.fixture
def metrics_controller(factory):
    return factory.get_metrics_controller()


@pytest.fixture
def synth_controller(factory):
    return factory.get_synth_controller()


@pytest.fixture
def pipeline_controller(factory):
    return factory.get_pipeline_controller()


@pytest.fixture
def two_triangles() -> AggregatedGraph:
    return graph_from_edges(TRIANGLES)


@pytest.fixture
def barbell() -> AggregatedGraph:
    return graph_from_edges(BARBELL)


@pytest.fixture(scope="session")
def small_synthetic():
    return Factory().get_synth_controller().generate(SMALL_SYNTH)
