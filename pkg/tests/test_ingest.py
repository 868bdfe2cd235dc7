import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from app.core.exceptions import DataException, ExitCode, ParseException
from app.models.tempgraph import make_pair
from app.schemas.requests.events import InteractionEvent
from app.schemas.requests.windowing import WindowingPolicy


def as_tuples(parsed):
    return [(event.t, event.u, event.v) for event in parsed.events]


def test_parse_reads_events_in_order(ingest_controller):
    parsed = ingest_controller.parse_events(["0,a,b", "5,b,c"])
    assert as_tuples(parsed) == [(0, "a", "b"), (5, "b", "c")]
    assert parsed.dropped_self_loops == 0


def test_parse_drops_self_loops(ingest_controller):
    parsed = ingest_controller.parse_events(["0,a,a"])
    assert parsed.events == []
    assert parsed.dropped_self_loops == 1


def test_parse_sorts_unordered_input(ingest_controller):
    parsed = ingest_controller.parse_events(["7,x,y", "2,p,q"])
    assert as_tuples(parsed) == [(2, "p", "q"), (7, "x", "y")]


def test_parse_sort_is_stable(ingest_controller):
    parsed = ingest_controller.parse_events(["3,c,d", "1,a,b", "3,a,c"])
    assert as_tuples(parsed) == [(1, "a", "b"), (3, "c", "d"), (3, "a", "c")]


def test_parse_skips_comments_and_blank_lines(ingest_controller):
    parsed = ingest_controller.parse_events(["# timestamp,u,v", "", "4, a , b"])
    assert as_tuples(parsed) == [(4, "a", "b")]


@pytest.mark.parametrize(
    "lines, line_number",
    [
        (["0,a,b", "1,a"], 2),
        (["# header", "x,a,b"], 2),
        (["-1,a,b"], 1),
        (["0,a,b,c"], 1),
        (["1.5,a,b"], 1),
    ],
)
def test_parse_rejects_malformed_lines(ingest_controller, lines, line_number):
    with pytest.raises(ParseException) as error:
        ingest_controller.parse_events(lines)
    assert error.value.line_number == line_number
    assert error.value.exit_code == ExitCode.DATA_ERROR
    assert f"line {line_number}" in error.value.detail


def test_read_events_from_file(ingest_controller, tmp_path):
    path = tmp_path / "events.csv"
    path.write_text("# t,u,v\n10,b,a\n3,a,c\n3,c,c\n", encoding="utf-8")
    parsed = ingest_controller.read_events(path)
    assert as_tuples(parsed) == [(3, "a", "c"), (10, "b", "a")]
    assert parsed.dropped_self_loops == 1


def test_read_missing_file_is_a_data_error(ingest_controller, tmp_path):
    with pytest.raises(DataException):
        ingest_controller.read_events(tmp_path / "missing.csv")


def test_event_schema_rejects_self_interaction():
    with pytest.raises(ValueError):
        InteractionEvent(t=0, u="a", v="a")


def test_build_windows_floor_division(ingest_controller):
    events = ingest_controller.parse_events(["0,a,b", "1,a,b", "10,a,c"]).events
    net = ingest_controller.build_windows(events, WindowingPolicy(window_length=5))

    assert [snapshot.index for snapshot in net.snapshots] == [0, 2]
    a, b, c = (net.index.index_of(label) for label in "abc")
    assert net.snapshots[0].edges == {make_pair(a, b)}
    assert net.snapshots[1].edges == {make_pair(a, c)}
    assert net.window_count == 3
    # repeated interactions collapse to one edge but keep their count
    assert net.snapshots[0].counts == {make_pair(a, b): 2}


def test_build_windows_single_event(ingest_controller):
    events = ingest_controller.parse_events(["0,a,b"]).events
    net = ingest_controller.build_windows(events, WindowingPolicy(window_length=1))
    assert len(net.snapshots) == 1
    assert net.window_count == 1
    assert len(net.snapshots[0]) == 1


def test_build_windows_empty_input(ingest_controller):
    net = ingest_controller.build_windows([], WindowingPolicy(window_length=3))
    assert net.is_empty()
    assert net.window_count == 0
    assert net.nodes == frozenset()


def test_snapshot_nodes_are_exactly_the_endpoints(ingest_controller):
    events = ingest_controller.parse_events(["0,a,b", "1,c,d", "2,a,c"]).events
    net = ingest_controller.build_windows(events, WindowingPolicy(window_length=2))
    first, second = net.snapshots
    assert {net.index.label_of(x) for x in first.nodes} == {"a", "b", "c", "d"}
    assert {net.index.label_of(x) for x in second.nodes} == {"a", "c"}


def test_origin_and_horizon_bound_the_observation(ingest_controller):
    events = ingest_controller.parse_events(
        ["1,a,b", "5,a,b", "9,b,c", "20,c,d"]
    ).events
    policy = WindowingPolicy(window_length=2, origin=4, horizon=12)
    net = ingest_controller.build_windows(events, policy)

    # [4, 12) holds 4 windows even though the last ones are quiet
    assert net.window_count == 4
    assert [snapshot.index for snapshot in net.snapshots] == [0, 2]
    assert "d" not in {net.index.label_of(x) for x in net.nodes}


def test_extra_nodes_join_the_universe(ingest_controller):
    events = ingest_controller.parse_events(["0,a,b"]).events
    net = ingest_controller.build_windows(
        events, WindowingPolicy(window_length=1), nodes=["z"]
    )
    assert net.index.labels == ("a", "b", "z")
    assert net.index.index_of("z") in net.nodes
    assert all(net.index.index_of("z") not in s.nodes for s in net.snapshots)


def test_horizon_must_follow_origin():
    with pytest.raises(ValueError):
        WindowingPolicy(window_length=1, origin=5, horizon=5)


event_lists = st.lists(
    st.tuples(
        st.integers(min_value=0, max_value=999),
        st.integers(min_value=0, max_value=19),
        st.integers(min_value=0, max_value=19),
    ).filter(lambda e: e[1] != e[2]),
    min_size=1,
    max_size=300,
)


@settings(
    max_examples=30,
    deadline=None,
    suppress_health_check=[HealthCheck.function_scoped_fixture],
)
@given(raw=event_lists)
def test_every_event_lands_in_exactly_one_snapshot(ingest_controller, raw):
    events = sorted(
        (InteractionEvent(t=t, u=f"n{u}", v=f"n{v}") for t, u, v in raw),
        key=lambda event: event.t,
    )
    net = ingest_controller.build_windows(events, WindowingPolicy(window_length=100))

    expected = {
        (event.t // 100, tuple(sorted((event.u, event.v)))) for event in events
    }
    observed = {
        (snapshot.index, tuple(sorted(net.index.label_of(x) for x in pair)))
        for snapshot in net.snapshots
        for pair in snapshot.edges
    }
    assert observed == expected
    assert net.total_snapshot_edges == len(expected)
    for snapshot in net.snapshots:
        assert all(u < v for u, v in snapshot.edges)


def test_build_windows_is_deterministic(ingest_controller):
    events = ingest_controller.parse_events(
        ["0,a,b", "3,c,a", "3,b,c", "8,d,a"]
    ).events
    policy = WindowingPolicy(window_length=3)
    assert ingest_controller.build_windows(events, policy) == ingest_controller.build_windows(
        events, policy
    )
