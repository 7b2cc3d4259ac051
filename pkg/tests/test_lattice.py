import pytest

from conftest import catalan_ref, count_occurrences, dyck_words
from dycklat.errors import ResourceLimitError
from dycklat.lattice import (
    HasseDiagram,
    count_chains_from,
    count_saturated_chains,
    total_valleys,
    valley_abscissae_sum,
)
from dycklat.paths import DyckPath, generate_paths


def test_known_chain_counts():
    assert count_saturated_chains(3, 2) == 4
    assert count_saturated_chains(4, 3) == 38
    assert count_saturated_chains(2, 1) == 1


def test_zero_length_chains_are_elements():
    for n in range(8):
        assert count_saturated_chains(n, 0) == catalan_ref(n)


def test_length_one_chains_are_edges():
    for n in range(8):
        edges = sum(count_occurrences(w, "du") for w in dyck_words(n))
        assert count_saturated_chains(n, 1) == edges
        assert total_valleys(n) == edges


def test_chains_vanish_above_total_rank():
    # the longest chain climbs one cover per step through n(n-1)/2 ranks
    for n in range(6):
        rank = n * (n - 1) // 2
        assert count_saturated_chains(n, rank) >= (1 if n else 1)
        assert count_saturated_chains(n, rank + 1) == 0


def test_per_path_counts_sum_to_totals():
    for n in range(7):
        for h in range(5):
            total = sum(count_chains_from(p, h) for p in generate_paths(n))
            assert total == count_saturated_chains(n, h)


def test_chains_from_single_path():
    assert count_chains_from(DyckPath("ududud"), 2) == 2
    assert count_chains_from(DyckPath("uuuddd"), 1) == 0
    # both maximal chains of the semilength-3 order start at the bottom
    assert count_chains_from(DyckPath("ududud"), 3) == 2


def test_valley_abscissae_relation():
    assert valley_abscissae_sum(2) == 2
    assert valley_abscissae_sum(3) == 15
    for n in range(2, 10):
        assert count_saturated_chains(n, 2) == 2 * valley_abscissae_sum(n - 1)


def test_diagram_structure():
    d = HasseDiagram.build(3)
    assert [str(p) for p in d.paths] == ["uuuddd", "uududd", "uuddud", "uduudd", "ududud"]
    assert len(d.edges) == total_valleys(3)
    for i, j in d.edges:
        assert d.paths[i].is_below(d.paths[j])
    up = d.upper_neighbors()
    bottom = d.index_of(DyckPath("ududud"))
    assert sorted(str(d.paths[j]) for j in up[bottom]) == ["uduudd", "uuddud"]


def test_dot_export():
    text = HasseDiagram.build(2).to_dot()
    assert text.splitlines() == [
        "digraph dyck_lattice_2 {",
        "  rankdir=BT;",
        '  0 [label="uudd"];',
        '  1 [label="udud"];',
        "  1 -> 0;",
        "}",
    ]


def test_edge_list_export():
    text = HasseDiagram.build(3).to_edge_list()
    lines = text.splitlines()
    assert lines[0] == "# n=3 nodes=5"
    assert len(lines) - 1 == total_valleys(3)
    assert all(len(line.split()) == 2 for line in lines[1:])


def test_resource_cap():
    with pytest.raises(ResourceLimitError):
        count_saturated_chains(15, 2)
    with pytest.raises(ResourceLimitError):
        HasseDiagram.build(15)
