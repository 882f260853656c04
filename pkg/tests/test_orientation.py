from __future__ import annotations

import random

from hypothesis import given
from hypothesis import strategies as st

from pairconfig.graph import cycle, star
from pairconfig.orientation import check_orientation, orient_min_indegree

from conftest import graphs, random_graph


def test_c5_is_directed_cycle():
    o = orient_min_indegree(cycle(5))
    assert all(o.in_degree(v) == 1 for v in range(5))


def test_star_points_at_center():
    o = orient_min_indegree(star(4))
    assert o.in_degree(0) == 4
    assert all(o.in_degree(v) == 0 for v in range(1, 5))


def test_random_50_vertices():
    g = random_graph(50, 0.15, random.Random(1))
    o = orient_min_indegree(g)
    assert check_orientation(g.edges(), o) == []


@given(graphs(max_n=14, p=0.3))
def test_every_edge_oriented_once(g):
    o = orient_min_indegree(g)
    assert sorted(tuple(sorted(a)) for a in o.arcs) == sorted(g.edges())
    assert check_orientation(g.edges(), o) == []


@given(st.lists(st.tuples(st.integers(0, 6), st.integers(0, 6)).filter(lambda e: e[0] != e[1]), max_size=30))
def test_multigraph_edge_lists(edges):
    o = orient_min_indegree(edges)
    assert len(o) == len(edges)
    assert check_orientation(edges, o) == []
