import itertools

import pytest

from isotemporal import (
    Beachball,
    Cycle,
    Daisy,
    Diaster,
    Star,
    TemporalNetwork,
    build_network,
    generate,
    max_temporal_path_length,
    temporal_paths,
)
from isotemporal.paths import PathLimitError, edge_sequences


def _net(spec, labels):
    g = generate(spec)
    return build_network(g, list(enumerate(labels)))


def test_single_edge_has_exactly_one_path():
    n = _net(Star(1), [1])
    found = temporal_paths(n)
    assert len(found) == 1
    (path,) = found
    assert path.edge_ids == (0,)
    assert path.length == 1


def test_diaster_1_1_paths_hand_enumerated():
    # left=1, central=2, right=3; edge order is (central, left, right)
    n = _net(Diaster(1, 1), [2, 1, 3])
    got = {(p.edge_ids, p.trace) for p in temporal_paths(n)}
    expected = {
        ((0,), (0, 1)),
        ((1,), (0, 2)),
        ((2,), (1, 3)),
        ((1, 0), (2, 0, 1)),
        ((0, 2), (0, 1, 3)),
        ((1, 0, 2), (2, 0, 1, 3)),
    }
    assert got == expected


def test_daisy_2_paths_chain_through_shared_vertex():
    n = _net(Daisy(2), [1, 2])
    got = {(p.edge_ids, p.trace) for p in temporal_paths(n)}
    assert got == {
        ((0,), (0, 0)),
        ((1,), (0, 0)),
        ((0, 1), (0, 0, 0)),
    }


def test_parallel_edge_paths_are_distinct_by_edge_id():
    n = _net(Beachball(2), [1, 2])
    assert edge_sequences(n) == {(0,), (1,), (0, 1)}


def test_max_length_single_edge():
    assert max_temporal_path_length(_net(Star(1), [1])) == 1


def test_max_length_consecutive_cycle():
    n = _net(Cycle(5), [1, 2, 3, 4, 5])
    assert max_temporal_path_length(n) == 5


def test_diaster_paths_never_exceed_three_edges():
    # exhaustive over every labeling of small diasters
    for spec in (Diaster(1, 1), Diaster(1, 2), Diaster(2, 2)):
        g = generate(spec)
        for labels in itertools.permutations(range(1, g.edge_count + 1)):
            assert max_temporal_path_length(TemporalNetwork(g, labels)) <= 3


def test_paths_strictly_increase_and_traces_chain():
    for spec, labels in [
        (Diaster(2, 3), (3, 1, 6, 2, 5, 4)),
        (Beachball(3), (2, 3, 1)),
        (Daisy(3), (3, 1, 2)),
        (Cycle(5), (2, 5, 1, 4, 3)),
    ]:
        n = _net(spec, labels)
        for path in temporal_paths(n):
            seq_labels = [n.labeling[e] for e in path.edge_ids]
            assert seq_labels == sorted(seq_labels)
            assert len(set(seq_labels)) == len(seq_labels)
            assert len(path.trace) == len(path.edge_ids) + 1
            for i, e in enumerate(path.edge_ids):
                assert set(n.graph.endpoints(e)) == {path.trace[i], path.trace[i + 1]}


def test_subpath_closure():
    n = _net(Diaster(2, 2), (3, 1, 2, 4, 5))
    seqs = edge_sequences(n)
    for seq in seqs:
        for start in range(len(seq)):
            for stop in range(start + 1, len(seq) + 1):
                assert seq[start:stop] in seqs


def test_path_limit_guard():
    n = _net(Daisy(5), [1, 2, 3, 4, 5])
    with pytest.raises(PathLimitError):
        temporal_paths(n, limit=10)
