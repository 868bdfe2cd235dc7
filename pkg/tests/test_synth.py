import pytest

from app.core.exceptions import SynthCapacityException
from app.models.synthetic import NOISE, SOCIAL
from app.schemas.requests.synth import SynthParams
from app.schemas.requests.windowing import WindowingPolicy

TINY = SynthParams(
    community_sizes=[5, 5, 6],
    windows=20,
    p_intra=0.4,
    social_density=0.6,
    noise_edges=12,
    noise_repeat=2,
    seed=42,
)


def test_ground_truth_is_contiguous_blocks(synth_controller):
    synthetic = synth_controller.generate(TINY)
    index = synthetic.network.index
    truth = synthetic.ground_truth

    assert len(truth) == 16
    assert truth.k == 3
    assert truth.community_of(index.index_of("v0000")) == 0
    assert truth.community_of(index.index_of("v0004")) == 0
    assert truth.community_of(index.index_of("v0005")) == 1
    assert truth.community_of(index.index_of("v0015")) == 2
    assert sorted(len(block) for block in truth.communities) == [5, 5, 6]


def test_every_node_belongs_to_the_universe(synth_controller):
    synthetic = synth_controller.generate(TINY)
    assert len(synthetic.network.nodes) == TINY.node_count
    assert synthetic.network.window_count == TINY.windows


def test_noise_pairs_cross_communities(synth_controller):
    synthetic = synth_controller.generate(TINY)
    truth = synthetic.ground_truth
    noise = [pair for pair, label in synthetic.noise_labels.items() if label == NOISE]
    social = [pair for pair, label in synthetic.noise_labels.items() if label == SOCIAL]

    assert len(noise) == TINY.noise_edges
    assert all(truth.community_of(u) != truth.community_of(v) for u, v in noise)
    assert all(truth.community_of(u) == truth.community_of(v) for u, v in social)


def test_noise_pairs_appear_in_noise_repeat_windows(synth_controller):
    synthetic = synth_controller.generate(TINY)
    windows = synthetic.network.pair_windows
    for pair, label in synthetic.noise_labels.items():
        if label == NOISE:
            assert windows[pair] == TINY.noise_repeat


def test_labels_cover_exactly_the_aggregated_edges(synth_controller):
    synthetic = synth_controller.generate(TINY)
    assert set(synthetic.noise_labels) == set(synthetic.network.pair_windows)


def test_social_pair_count_follows_the_density(synth_controller):
    params = TINY.model_copy(update={"p_intra": 1.0})
    synthetic = synth_controller.generate(params)
    social = [label for label in synthetic.noise_labels.values() if label == SOCIAL]
    # 10 + 10 + 15 intra pairs, 60% of each
    assert len(social) == 6 + 6 + 9
    # with p_intra = 1 every social pair is active in every window
    windows = synthetic.network.pair_windows
    for pair, label in synthetic.noise_labels.items():
        if label == SOCIAL:
            assert windows[pair] == params.windows


def test_events_rebuild_the_same_network(synth_controller, ingest_controller):
    synthetic = synth_controller.generate(TINY)
    policy = WindowingPolicy(window_length=1, origin=0, horizon=TINY.windows)
    rebuilt = ingest_controller.build_windows(
        synthetic.events, policy, nodes=synthetic.network.index.labels
    )
    assert rebuilt.pair_windows.keys() == synthetic.network.pair_windows.keys()
    assert rebuilt.snapshots == synthetic.network.snapshots


def test_generation_is_deterministic(synth_controller):
    first = synth_controller.generate(TINY)
    second = synth_controller.generate(TINY)
    assert first.events == second.events
    assert first.noise_labels == second.noise_labels

    other = synth_controller.generate(TINY.model_copy(update={"seed": 43}))
    assert other.events != first.events


def test_noise_capacity_is_checked(synth_controller):
    # two communities of 2 leave 4 cross pairs
    params = SynthParams(community_sizes=[2, 2], windows=5, noise_edges=5)
    with pytest.raises(SynthCapacityException) as error:
        synth_controller.generate(params)
    assert "4 available" in error.value.detail


@pytest.mark.parametrize(
    "overrides",
    [
        {"community_sizes": []},
        {"community_sizes": [3, 0]},
        {"community_sizes": [1, 2]},
        {"windows": 1},
        {"noise_repeat": 60},
        {"p_intra": 1.5},
    ],
)
def test_invalid_parameters(overrides):
    with pytest.raises(ValueError):
        SynthParams(**overrides)


def test_write_produces_the_three_files(synth_controller, ingest_controller, tmp_path):
    synthetic = synth_controller.generate(TINY)
    paths = synth_controller.write(synthetic, tmp_path / "bench")
    assert [path.name for path in paths] == [
        "events.csv",
        "ground_truth.csv",
        "noise_labels.csv",
    ]

    parsed = ingest_controller.read_events(paths[0])
    assert tuple(parsed.events) == synthetic.events

    truth = synth_controller.partition_repository.read(paths[1], synthetic.network.index)
    assert truth == synthetic.ground_truth

    labels = synth_controller.noise_label_repository.read(
        paths[2], synthetic.network.index
    )
    assert labels == synthetic.noise_labels


def test_default_parameters():
    params = SynthParams()
    assert params.community_sizes == [25, 25, 25, 25]
    assert params.windows == 50
    assert params.noise_edges == 200
