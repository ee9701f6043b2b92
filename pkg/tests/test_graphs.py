"""Graph families, matchings, and admissible matchings."""

import random

import pytest

from matchpower import graphs as gr
from matchpower.errors import (CapExceededError, EdgeListParseError,
                               InvalidParameterError)


def test_path_examples():
    assert gr.path(1).n_vertices == 1
    assert gr.path(1).n_edges() == 0
    p4 = gr.path(4)
    assert p4.edges() == [(0, 1), (1, 2), (2, 3)]
    assert p4.labels == ("x1", "x2", "x3", "x4")
    p6 = gr.path(6)
    assert p6.n_vertices == 6 and p6.n_edges() == 5
    assert gr.matching_number(p6) == 3
    with pytest.raises(InvalidParameterError):
        gr.path(0)


def test_cycle_examples():
    assert gr.cycle(3).n_edges() == 3
    assert gr.matching_number(gr.cycle(7)) == 3
    assert len(gr.enumerate_k_matchings(gr.cycle(4), 2)) == 2
    with pytest.raises(InvalidParameterError):
        gr.cycle(2)


def test_whisker_examples():
    wp3 = gr.whisker(gr.path(3))
    assert wp3.n_vertices == 6 and wp3.n_edges() == 5
    wc5 = gr.whisker(gr.cycle(5))
    assert wc5.n_vertices == 10 and wc5.n_edges() == 10
    assert gr.matching_number(wc5) == 5
    single = gr.whisker(gr.from_edges(1, []))
    assert single.n_edges() == 1


def test_multi_whiskered_path():
    g = gr.multi_whiskered_path(3, [1, 1, 1])
    assert g.same_structure(gr.whisker(gr.path(3))) or (
        g.n_vertices == 6 and g.n_edges() == 5
        and gr.matching_number(g) == 3)
    g = gr.multi_whiskered_path(2, [2, 3])
    assert g.n_vertices == 7 and g.n_edges() == 6
    assert gr.matching_number(gr.multi_whiskered_path(4, [1, 1, 1, 1])) == 4
    with pytest.raises(InvalidParameterError):
        gr.multi_whiskered_path(2, [1, 0])


def test_multi_whiskered_cycle():
    g = gr.multi_whiskered_cycle(5, 1)
    w = gr.whisker(gr.cycle(5))
    assert g.n_vertices == w.n_vertices and g.n_edges() == w.n_edges()
    assert gr.matching_number(g) == 5
    assert gr.multi_whiskered_cycle(4, 3).n_vertices == 10
    with pytest.raises(InvalidParameterError):
        gr.multi_whiskered_cycle(2, 1)
    with pytest.raises(InvalidParameterError):
        gr.multi_whiskered_cycle(4, 0)


def test_parse_edge_list():
    assert gr.parse_edge_list("a b\nb c").same_structure(gr.path(3))
    assert gr.parse_edge_list("1 2\n2 3\n3 1").same_structure(gr.cycle(3))
    assert gr.parse_edge_list("a b\na b").n_edges() == 1
    assert gr.parse_edge_list("a b # a comment\n\n# whole line\nb c").n_edges() == 2
    with pytest.raises(EdgeListParseError) as exc:
        gr.parse_edge_list("a b\nu u")
    assert exc.value.line_no == 2
    with pytest.raises(EdgeListParseError):
        gr.parse_edge_list("a b c")


def test_delete_vertices():
    c5 = gr.cycle(5)
    assert gr.delete_vertices(c5, {0}).same_structure(gr.path(4))
    p4 = gr.path(4)
    assert gr.delete_vertices(p4, set()) == p4
    d = gr.delete_vertices(gr.cycle(7), {0, 1, 6})
    assert d.same_structure(gr.path(4))
    assert d.labels == ("x3", "x4", "x5", "x6")
    with pytest.raises(InvalidParameterError):
        gr.delete_vertices(p4, {9})


def test_graph_invariants_after_construction():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(1, 9)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < 0.4]
        g = gr.from_edges(n, edges)
        for i in range(n):
            assert i not in g.adjacency[i]
            for j in g.adjacency[i]:
                assert i in g.adjacency[j]
        drop = set(rng.sample(range(n), rng.randint(0, n - 1)))
        h = gr.delete_vertices(g, drop)
        for i in range(h.n_vertices):
            assert i not in h.adjacency[i]


def test_matching_enumeration():
    p4 = gr.path(4)
    two = gr.enumerate_k_matchings(p4, 2)
    assert [m.sorted_edges() for m in two] == [[(0, 1), (2, 3)]]
    assert gr.enumerate_k_matchings(p4, 0) == [gr.Matching(frozenset())]
    # empty exactly above the matching number
    rng = random.Random(17)
    for _ in range(40):
        n = rng.randint(2, 8)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < 0.4]
        g = gr.from_edges(n, edges)
        nu = gr.matching_number(g)
        for k in range(0, nu + 2):
            ms = gr.enumerate_k_matchings(g, k)
            assert bool(ms) == (k <= nu)
            seen = set()
            for m in ms:
                assert m.size() == k
                key = tuple(m.sorted_edges())
                assert key not in seen
                seen.add(key)


def test_matching_number_families():
    for n in range(1, 12):
        assert gr.matching_number(gr.path(n)) == n // 2
    assert gr.matching_number(gr.cycle(9)) == 4
    for m in range(3, 8):
        assert gr.matching_number(gr.whisker(gr.cycle(m))) == m


def test_induced_matching_number():
    assert gr.induced_matching_number(gr.path(4)) == 1
    assert gr.induced_matching_number(gr.cycle(3)) == 1
    # one plus half of the remaining path length, found by brute force
    for m in range(3, 8):
        g = gr.multi_whiskered_path(m, [1] * m)
        assert gr.induced_matching_number(g) == 1 + (m - 1) // 2
    rng = random.Random(23)
    for _ in range(40):
        n = rng.randint(2, 8)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < 0.35]
        g = gr.from_edges(n, edges)
        assert gr.induced_matching_number(g) <= gr.matching_number(g)


def test_admissible_matching_paths():
    aim, witness = gr.admissible_matching_number(gr.path(7), 2)
    assert aim == 3
    assert gr.check_admissible_witness(gr.path(7), witness, 2)
    aim, witness = gr.admissible_matching_number(gr.path(2), 1)
    assert aim == 1 and len(witness.blocks) == 1
    with pytest.raises(InvalidParameterError):
        gr.admissible_matching_number(gr.path(4), 5)


def test_admissible_matching_k1_is_induced():
    rng = random.Random(29)
    graphs = [gr.whisker(gr.path(3)), gr.path(6), gr.cycle(6)]
    for _ in range(25):
        n = rng.randint(2, 7)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < 0.3]
        if edges and len(edges) <= gr.AIM_EDGE_CAP:
            graphs.append(gr.from_edges(n, edges))
    for g in graphs:
        if gr.matching_number(g) < 1:
            continue
        aim, witness = gr.admissible_matching_number(g, 1)
        assert aim == gr.induced_matching_number(g)
        if witness is not None:
            assert gr.check_admissible_witness(g, witness, 1)
            assert all(len(b) == 1 for b in witness.blocks)


def test_admissible_witnesses_validate_independently():
    rng = random.Random(31)
    checked = 0
    while checked < 25:
        n = rng.randint(3, 8)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < 0.3]
        g = gr.from_edges(n, edges)
        nu = gr.matching_number(g)
        if nu < 1 or g.n_edges() > gr.AIM_EDGE_CAP:
            continue
        k = rng.randint(1, nu)
        aim, witness = gr.admissible_matching_number(g, k)
        if witness is not None:
            assert gr.check_admissible_witness(g, witness, k)
            assert witness.matching().size() == aim
        checked += 1


def test_admissible_witness_rejects_bad_blocks():
    p7 = gr.path(7)
    # blocks that are not pairwise gaps
    bad = gr.AdmissibleWitness((frozenset({(0, 1)}), frozenset({(2, 3)})))
    assert not gr.check_admissible_witness(p7, bad, 2)
    # oversized matching for the block count at k = 1
    _, good = gr.admissible_matching_number(p7, 2)
    merged = gr.AdmissibleWitness(
        (frozenset(e for b in good.blocks for e in b),))
    assert not gr.check_admissible_witness(p7, merged, 1)


def test_aim_cap():
    with pytest.raises(CapExceededError):
        gr.admissible_matching_number(gr.cycle(17), 2)


def test_descriptors():
    assert gr.from_descriptor("path:4").same_structure(gr.path(4))
    assert gr.from_descriptor("cycle:5").same_structure(gr.cycle(5))
    assert gr.from_descriptor("wpath:3").same_structure(gr.whisker(gr.path(3)))
    assert gr.from_descriptor("wcycle:4").same_structure(gr.whisker(gr.cycle(4)))
    assert gr.from_descriptor("mwcycle:4:2").n_vertices == 4 + 3 + 2
    assert gr.from_descriptor("mwpath:3:1,2,1").n_edges() == 2 + 4
    cm = gr.from_descriptor("cmforest:a-b,b-c")
    assert cm.same_structure(gr.whisker(gr.path(3)))
    assert gr.from_descriptor("cmforest:a-b,c").n_vertices == 6
    with pytest.raises(InvalidParameterError):
        gr.from_descriptor("blob:3")
    with pytest.raises(InvalidParameterError):
        gr.from_descriptor("path:x")
    with pytest.raises(InvalidParameterError):
        gr.from_descriptor("cmforest:a-b,b-c,c-a")


def test_forests_up_to_iso_counts():
    # unlabeled forests on exactly n vertices: 1, 2, 3, 6, 10
    by_n = {}
    for f in gr.forests_up_to_iso(5):
        by_n[f.n_vertices] = by_n.get(f.n_vertices, 0) + 1
    assert by_n == {1: 1, 2: 2, 3: 3, 4: 6, 5: 10}
