import json
import random

import numpy as np
import pytest

from genpaley import ntheory as nt, paley, qchar
from genpaley.errors import DomainError, ParityError

POSITIVE = qchar.fundamental_discriminants(3, 2000)
BOTH = qchar.fundamental_discriminants(3, 2000, sign=0)


def cycle_edges(n):
    return sorted((min(u, (u + 1) % n), max(u, (u + 1) % n)) for u in range(n))


@pytest.mark.parametrize("delta", [5, 8, 12])
def test_small_cases_are_cycles(delta):
    g = paley.build(delta)
    assert sorted(g.edges()) == cycle_edges(delta)
    assert paley.is_cycle(g)
    assert paley.degree(g) == 2


def test_p21():
    g = paley.build(21)
    assert g.order == 21 and not g.directed
    assert paley.degree(g) == 6
    assert not paley.is_cycle(g)
    assert len(list(g.edges())) == 21 * 6 // 2


def test_generator_invariants():
    for d in BOTH:
        g = paley.build(d)
        gen = g.generator.astype(int)
        assert gen[0] == 0 and gen[1] == 1
        assert gen.sum() == nt.euler_phi(d.conductor) // 2
        symmetric = np.array_equal(gen[1:], gen[1:][::-1])
        assert symmetric == (d.delta > 0) == (not g.directed)
        assert paley.is_connected(g)


def test_edge_relation_matches_definition():
    rng = random.Random(7)
    for d in BOTH[::10]:
        g = paley.build(d)
        character = qchar.quadratic_character(d)
        for _ in range(100):
            u, v = rng.randrange(d.conductor), rng.randrange(d.conductor)
            assert g.has_edge(u, v) == (character(v - u) == 1)


def test_neighbors_and_adjacency():
    g = paley.build(13)
    adj = g.adjacency_matrix()
    assert np.array_equal(adj, adj.T)
    for u in range(13):
        assert sorted(g.neighbors(u)) == sorted(np.flatnonzero(adj[u]).tolist())


def brute_bipartite(g):
    """Independent BFS 2-coloring over explicit neighbor lists."""
    color = {0: 0}
    queue = [0]
    while queue:
        u = queue.pop()
        for v in g.neighbors(u):
            if v not in color:
                color[v] = 1 - color[u]
                queue.append(v)
            elif color[v] == color[u]:
                return False
    return True


@pytest.mark.parametrize("delta, expected", [(8, True), (5, False), (12, True), (24, True), (21, False)])
def test_bipartite_examples(delta, expected):
    assert paley.is_bipartite(paley.build(delta)) == expected


def test_bipartite_iff_even():
    for d in POSITIVE:
        g = paley.build(d)
        parts = paley.bipartition(g)
        assert (parts is not None) == (d.delta % 2 == 0)
        if parts is not None:
            n = d.conductor
            assert parts == (frozenset(range(1, n, 2)), frozenset(range(0, n, 2)))
    for d in POSITIVE[:120]:
        assert brute_bipartite(paley.build(d)) == paley.is_bipartite(paley.build(d))


def test_cycle_iff_small():
    assert [d.delta for d in POSITIVE if paley.is_cycle(paley.build(d))] == [5, 8, 12]


def test_directed_graphs_rejected():
    g = paley.build(-7)
    for fn in (paley.is_bipartite, paley.is_cycle):
        with pytest.raises(ParityError):
            fn(g)


def test_export_edge_list_p5():
    assert paley.export(paley.build(5), "edge_list") == "0 1\n0 4\n1 2\n2 3\n3 4"


def test_export_dot_p8():
    text = paley.export(paley.build(8), "dot")
    assert text.startswith('graph "P_8" {')
    assert text.count(" -- ") == 8
    for u in range(8):
        assert f"  {u};" in text


def test_export_digraph_minus_four():
    text = paley.export(paley.build(-4), "dot")
    assert text.startswith('digraph "P_-4" {')
    arcs = [line.strip() for line in text.splitlines() if "->" in line]
    assert arcs == ["0 -> 1;", "1 -> 2;", "2 -> 3;", "3 -> 0;"]


def test_export_json():
    text = paley.export(paley.build(12), "adjacency_json")
    assert text == '{"delta":12,"D":12,"generator":[0,1,0,0,0,0,0,0,0,0,0,1]}'
    assert json.loads(text)["D"] == 12


def test_export_unknown_format():
    with pytest.raises(DomainError):
        paley.export(paley.build(5), "graphml")
