import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from app.controllers.metrics import MetricsController
from app.core.exceptions import NodeSetMismatchException, UndefinedMetricException
from app.models.partition import Partition
from tests.helpers import (
    exhaustive_projection,
    graph_from_edges,
    labelled,
    pairwise_modularity,
    partitions_of,
    random_graphs,
)

fixture_settings = settings(
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.function_scoped_fixture],
)


def test_two_triangles_modularity(metrics_controller, two_triangles):
    partition = labelled(two_triangles, "abc", "def")
    assert metrics_controller.modularity(two_triangles, partition) == pytest.approx(0.5)


def test_barbell_modularity(metrics_controller, barbell):
    partition = labelled(barbell, "abc", "def")
    assert metrics_controller.modularity(barbell, partition) == pytest.approx(5 / 14)


def test_single_community_has_zero_modularity(metrics_controller, barbell):
    partition = labelled(barbell, "abcdef")
    assert metrics_controller.modularity(barbell, partition) == pytest.approx(0.0)


def test_modularity_ignores_weights(metrics_controller):
    heavy = graph_from_edges([("a", "b"), ("a", "b"), ("a", "b"), ("b", "c")])
    light = graph_from_edges([("a", "b"), ("b", "c")])
    q_heavy = metrics_controller.modularity(heavy, labelled(heavy, "ab", "c"))
    q_light = metrics_controller.modularity(light, labelled(light, "ab", "c"))
    assert q_heavy == pytest.approx(q_light)


def test_modularity_needs_matching_nodes(metrics_controller, barbell):
    with pytest.raises(NodeSetMismatchException):
        metrics_controller.modularity(barbell, labelled(barbell, "abc", "de"))


def test_modularity_needs_edges(metrics_controller):
    graph = graph_from_edges([], nodes=["a", "b"])
    with pytest.raises(UndefinedMetricException):
        metrics_controller.modularity(graph, Partition.singletons(graph.nodes))


@fixture_settings
@given(data=st.data())
def test_modularity_matches_the_pairwise_sum(metrics_controller, data):
    graph = data.draw(random_graphs(min_nodes=2, max_nodes=10, min_edges=1))
    partition = data.draw(partitions_of(sorted(graph.nodes)))
    q = metrics_controller.modularity(graph, partition)
    assert abs(q - pairwise_modularity(graph, partition)) < 1e-12
    assert -0.5 <= q <= 1.0


def test_conductance_of_the_barbell_halves(metrics_controller, barbell):
    report = metrics_controller.conductance(barbell, labelled(barbell, "abc", "def"))
    assert report.conductance_per_community == pytest.approx([1 / 7, 1 / 7])
    assert report.mean_conductance == pytest.approx(1 / 7)
    assert report.cut_ratio_per_community == pytest.approx([1 / 3, 1 / 3])
    assert report.skipped_communities == []


def test_conductance_of_a_community_without_internal_edges(metrics_controller):
    graph = graph_from_edges([("a", "b"), ("b", "c"), ("a", "c"), ("c", "d")])
    report = metrics_controller.conductance(graph, labelled(graph, "abc", "d"))
    assert report.conductance_per_community == pytest.approx([1 / 7, 1.0])
    assert report.cut_ratio_per_community[0] == pytest.approx(1 / 3)
    assert report.cut_ratio_per_community[1] is None


def test_conductance_skips_isolated_communities(metrics_controller):
    graph = graph_from_edges([("a", "b")], nodes=["z"])
    report = metrics_controller.conductance(graph, labelled(graph, "ab", "z"))
    assert report.conductance_per_community == [0.0]
    assert report.skipped_communities == [1]
    assert report.mean_conductance == 0.0


def test_conductance_of_an_edgeless_graph(metrics_controller):
    graph = graph_from_edges([], nodes=["a", "b"])
    report = metrics_controller.conductance(graph, Partition.singletons(graph.nodes))
    assert report.conductance_per_community == []
    assert report.mean_conductance is None
    assert report.skipped_communities == [0, 1]


@fixture_settings
@given(data=st.data())
def test_conductance_stays_in_the_unit_interval(metrics_controller, data):
    graph = data.draw(random_graphs(min_nodes=2, max_nodes=10))
    partition = data.draw(partitions_of(sorted(graph.nodes)))
    report = metrics_controller.conductance(graph, partition)
    assert all(0.0 <= value <= 1.0 for value in report.conductance_per_community)
    scored = len(report.conductance_per_community)
    assert scored + len(report.skipped_communities) == partition.k


def test_quality_report(metrics_controller, barbell):
    report = metrics_controller.quality_report(barbell, labelled(barbell, "abc", "def"))
    assert report.modularity == pytest.approx(5 / 14)
    assert report.community_count == 2
    assert report.mean_conductance == pytest.approx(1 / 7)


def test_quality_report_without_edges(metrics_controller):
    graph = graph_from_edges([], nodes=["a"])
    report = metrics_controller.quality_report(graph, Partition.singletons(graph.nodes))
    assert report.modularity is None
    assert report.community_count == 1


def test_projection_distance_example(metrics_controller):
    a = Partition.from_communities([[0, 1, 2], [3, 4, 5]])
    b = Partition.from_communities([[0, 1], [2, 3], [4, 5]])
    assert metrics_controller.projection_distance(a, b) == 4
    assert metrics_controller.projection_distance(b, a) == 5
    assert metrics_controller.split_join(a, b) == 3


def test_split_join_of_equal_partitions(metrics_controller):
    a = Partition.from_communities([[0, 1], [2]])
    assert metrics_controller.split_join(a, a) == 0


def test_split_join_extremes(metrics_controller):
    nodes = range(6)
    one = Partition.from_communities([nodes])
    each = Partition.singletons(nodes)
    # five of the six nodes have to move
    assert metrics_controller.split_join(one, each) == 5


def test_split_join_of_empty_partitions(metrics_controller):
    empty = Partition.from_assignment({})
    assert metrics_controller.split_join(empty, empty) == 0


def test_split_join_needs_the_same_nodes(metrics_controller):
    with pytest.raises(NodeSetMismatchException):
        metrics_controller.split_join(
            Partition.singletons([0, 1]), Partition.singletons([0, 1, 2])
        )


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_split_join_properties(data):
    metrics = MetricsController()
    n = data.draw(st.integers(min_value=1, max_value=12))
    nodes = list(range(n))
    a = data.draw(partitions_of(nodes))
    b = data.draw(partitions_of(nodes))
    c = data.draw(partitions_of(nodes))

    assert metrics.projection_distance(a, b) == exhaustive_projection(a, b)
    ab = metrics.split_join(a, b)
    assert ab == metrics.split_join(b, a)
    assert 0 <= ab <= 2 * n
    assert (ab == 0) == (a == b)
    assert metrics.split_join(a, c) <= ab + metrics.split_join(b, c)


def test_restrict_to_common(metrics_controller):
    a = Partition.from_communities([[0, 1], [2, 3]])
    b = Partition.from_communities([[1, 2, 4]])
    ra, rb = metrics_controller.restrict_to_common(a, b)
    assert ra.nodes == rb.nodes == frozenset({1, 2})
    assert ra.k == 2
    assert rb.k == 1
    assert metrics_controller.split_join(ra, rb) == 1


def test_consensus_matrix(metrics_controller):
    partitions = {
        "lp": Partition.from_communities([[0, 1, 2], [3, 4, 5]]),
        "louvain": Partition.from_communities([[0, 1], [2, 3], [4, 5]]),
        "cnm": Partition.from_communities([[0, 1, 2], [3, 4, 5]]),
    }
    report = metrics_controller.consensus_matrix(partitions)
    assert report.algorithms == ["lp", "louvain", "cnm"]
    assert report.matrix == [[0, 3, 0], [3, 0, 3], [0, 3, 0]]
    assert report.score == pytest.approx(2.0)


def test_consensus_of_a_single_algorithm(metrics_controller):
    report = metrics_controller.consensus_matrix(
        {"lp": Partition.from_communities([[0, 1]])}
    )
    assert report.matrix == [[0]]
    assert report.score == 0.0


def test_consensus_needs_a_common_node_set(metrics_controller):
    with pytest.raises(NodeSetMismatchException):
        metrics_controller.consensus_matrix(
            {
                "lp": Partition.singletons([0, 1]),
                "cnm": Partition.singletons([0, 2]),
            }
        )


def test_contingency_counts_every_node_once(metrics_controller):
    a = Partition.from_communities([[0, 1, 2], [3]])
    b = Partition.from_communities([[0, 3], [1, 2]])
    table = metrics_controller._contingency(a, b)
    assert table.tolist() == [[1, 2], [1, 0]]
    assert table.sum() == 4
