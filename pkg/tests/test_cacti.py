import itertools

import networkx as nx
import pytest

from randic_cacti import build_G0, build_extremal_orientations, canonical_label, enumerate_cacti, extremal_set
from randic_cacti import fixtures, index_digraph, index_graph, reverse
from randic_cacti.cacti import connected_graphs, connected_graphs_by_subsets, cycle_graph, export_catalog, star_graph
from randic_cacti.graph import cactus_profile, parse_graph


def test_G0_examples():
    assert build_G0(6, 0).edge_set == star_graph(6).edge_set
    assert len(enumerate_cacti(5, 2)) == 1
    assert canonical_label(build_G0(5, 2)) == canonical_label(enumerate_cacti(5, 2)[0])
    assert index_graph(build_G0(6, 2), 1).value == 42


@pytest.mark.parametrize("n, r", [(2, 0), (3, 1), (6, 2), (9, 4), (10, 1)])
def test_G0_shape(n, r):
    g = build_G0(n, r)
    prof = cactus_profile(g)
    assert g.is_connected() and prof.is_cactus and prof.cycle_count == r
    assert g.degree(0) == n - 1 and g.m == n - 1 + r


@pytest.mark.parametrize("n, r", [(1, 0), (4, 2), (3, -1)])
def test_infeasible_parameters(n, r):
    with pytest.raises(ValueError):
        build_G0(n, r)
    with pytest.raises(ValueError):
        build_extremal_orientations(n, r)


@pytest.mark.parametrize("n, r, a, value", [(6, 2, 1, 19), (4, 1, 1, 8), (5, 0, 2, 34), (7, 3, 1, 27)])
def test_extremal_orientation_values(n, r, a, value):
    first, second = build_extremal_orientations(n, r)
    assert index_digraph(first, a).value == value == index_digraph(second, a).value
    assert first.out_deg[0] == n - 1 and second.in_deg[0] == n - 1
    assert reverse(first) == second


def test_extremal_set_membership():
    assert len(extremal_set(4, 1, 1).digraphs) == 4
    assert len(extremal_set(4, 1, 2).digraphs) == 2
    fam = extremal_set(7, 3, 1)
    assert len(fam.digraphs) == 2 and all(index_digraph(d, 1).value == 27 for d in fam.digraphs)
    # the two sink-source C4 orientations are isomorphic: 4 members, 3 classes
    assert len(extremal_set(4, 1, 1).labels) == 3


def test_flipping_triangle_edge_gives_isomorphic_orientation():
    # the outer edge of each triangle may point either way: both choices are isomorphic
    first, _ = build_extremal_orientations(7, 3)
    arcs = [a if a != (1, 2) else (2, 1) for a in first.arcs]
    from randic_cacti import Digraph

    assert canonical_label(Digraph.from_arcs(7, arcs)) == canonical_label(first)


def test_enumeration_examples():
    assert len(enumerate_cacti(5, 2)) == 1
    assert len(enumerate_cacti(3, 1)) == 1
    four_one = {canonical_label(g) for g in enumerate_cacti(4, 1)}
    assert four_one == {canonical_label(cycle_graph(4)), canonical_label(fixtures()["G1"])}


def test_fixtures():
    g1, g2 = fixtures()["G1"], fixtures()["G2"]
    assert (g1.n, g1.m, cactus_profile(g1).cycle_count) == (4, 4, 1)
    assert (g2.n, g2.m, cactus_profile(g2).cycle_count) == (5, 6, 2)


@pytest.mark.parametrize("n", range(1, 11))
def test_tree_counts_match_independent_generator(n):
    assert len(enumerate_cacti(n, 0)) == sum(1 for _ in nx.nonisomorphic_trees(n)) if n > 1 else 1


def _pruefer_tree_classes(n):
    # labeled trees from every Pruefer sequence, deduplicated with networkx's tree isomorphism
    reps = []
    for seq in itertools.product(range(n), repeat=n - 2):
        t = nx.from_prufer_sequence(list(seq))
        if not any(nx.is_isomorphic(t, s) for s in reps):
            reps.append(t)
    return len(reps)


@pytest.mark.parametrize("n", range(3, 8))
def test_tree_counts_match_pruefer_oracle(n):
    assert len(enumerate_cacti(n, 0)) == _pruefer_tree_classes(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_cactus_counts_match_filtered_connected_graphs(n):
    # oracle: all connected graphs, kept when block decomposition says cactus
    by_r = {}
    for g in connected_graphs(n):
        prof = cactus_profile(g)
        if prof.is_cactus:
            by_r[prof.cycle_count] = by_r.get(prof.cycle_count, 0) + 1
    for r in range(0, (n - 1) // 2 + 1):
        assert len(enumerate_cacti(n, r)) == by_r.get(r, 0)


def test_total_cactus_counts():
    totals = [sum(len(enumerate_cacti(n, r)) for r in range(0, (n - 1) // 2 + 1)) for n in range(1, 11)]
    assert totals == [1, 1, 2, 4, 9, 23, 63, 188, 596, 1979]


def test_enumerated_cacti_are_distinct_and_valid():
    for n in range(2, 9):
        for r in range(0, (n - 1) // 2 + 1):
            gs = enumerate_cacti(n, r)
            assert len({canonical_label(g) for g in gs}) == len(gs)
            for g in gs:
                prof = cactus_profile(g)
                assert g.n == n and g.is_connected() and prof.is_cactus and prof.cycle_count == r


def test_connected_graph_generators_agree():
    assert [len(connected_graphs(n)) for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]
    for n in range(1, 6):
        assert {canonical_label(g) for g in connected_graphs(n)} == {
            canonical_label(g) for g in connected_graphs_by_subsets(n)
        }


def test_enumeration_cap():
    with pytest.raises(ValueError):
        enumerate_cacti(11, 0)


def test_export_catalog(tmp_path):
    paths = export_catalog(enumerate_cacti(6, 1), 6, 1, tmp_path)
    assert [p.name for p in paths][:2] == ["cactus_n6_r1_0.txt", "cactus_n6_r1_1.txt"]
    back = [parse_graph(p.read_text()) for p in paths]
    assert [canonical_label(g) for g in back] == [canonical_label(g) for g in enumerate_cacti(6, 1)]
