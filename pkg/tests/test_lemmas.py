from __future__ import annotations

import itertools
import json
import random
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pairconfig.graph import (
    ExceptionalKind,
    build_graph,
    complete_bipartite,
    cycle,
    detect_exceptional,
    induced,
    is_connected,
)
from pairconfig.labeling import ALL_PAIRS, FULL, LabelPair, as_config, is_satisfied, missing_colors, verify
from pairconfig.lemmas import (
    ATTACHED_PATH_TABLE,
    ATTACH_CYCLE_TABLES,
    ATTACH_SMALL_TABLES,
    C5_PATTERN,
    C6_PATTERN,
    K24_LABELS,
    Construction,
    LemmaError,
    OneVertex,
    StarSpec,
    TwoVertex,
    add_c5_two_tails,
    almost_satisfy_exceptional,
    almost_tolerance,
    attach_path_to_cycle,
    attach_path_to_small,
    attached_path_labels,
    contract_degree2_path,
    contracted_path_labels,
    cycle_config,
    cycle_with_added_path,
    extend_attached_path,
    extend_path3,
    extend_star,
    extend_tailed_cycle,
    forbidden_pairs,
    join_configs,
    join_via_path,
    k24_config,
    path3_labels,
    small_extend,
)
from pairconfig.oracle import constrained_solve, exact_solve
from pairconfig.sparse import C7_STAR_LABELS, c7_star_config

FIXTURES = Path(__file__).parent / "fixtures" / "golden.json"
P = LabelPair


def load_golden() -> list[dict]:
    return json.loads(FIXTURES.read_text())


def golden_graph(entry: dict):
    idx = {name: i for i, name in enumerate(entry["vertices"])}
    g = build_graph(len(idx), [(idx[a], idx[b]) for a, b in entry["edges"]])
    f = {idx[name]: LabelPair(*p) for name, p in entry["labels"].items()}
    return g, f


def path_graph_with_anchors(k: int):
    """Anchors x = 0, y = 1 (possibly the same role), path 2..k+1."""
    chain = [0, *range(2, k + 2), 1]
    return build_graph(k + 2, list(zip(chain, chain[1:])))


# ---------------------------------------------------------------------------
# Golden fixtures


@pytest.mark.parametrize("entry", load_golden(), ids=lambda e: e["name"])
def test_golden_fixture_verifies(entry):
    g, f = golden_graph(entry)
    assert len(f) == g.n
    assert verify(g, f) == []


def test_library_tables_match_fixtures():
    gold = {e["name"]: e for e in load_golden()}
    assert [tuple(gold["c5_pattern"]["labels"][f"v{i}"]) for i in range(1, 6)] == [tuple(p) for p in C5_PATTERN]
    assert [tuple(gold["c6_assignment"]["labels"][f"v{i}"]) for i in range(1, 7)] == [tuple(p) for p in C6_PATTERN]
    k24 = gold["k24"]["labels"]
    assert [tuple(k24[v]) for v in ("x1", "x2", "y1", "y2", "y3", "y4")] == [tuple(p) for p in K24_LABELS]
    star = gold["c7_with_star"]
    assert [tuple(star["labels"][v]) for v in star["vertices"]] == [tuple(p) for p in C7_STAR_LABELS]
    for name, key in (
        ("c4_path_case2", (4, 4, 0, 2)),
        ("c7_path_case3", (7, 3, 0, 0)),
        ("c7_path_case4", (7, 4, 0, 5)),
        ("c7_path_case5", (7, 3, 0, 4)),
    ):
        e = gold[name]
        assert [tuple(e["labels"][v]) for v in e["vertices"]] == [tuple(p) for p in ATTACH_CYCLE_TABLES[key]]
    for name, key in (
        ("c4c4_path_at_u2", ("C4dotC4", "u2", "u2", 3)),
        ("c4c4_path_at_v", ("C4dotC4", "v", "v", 3)),
        ("c4c4_path_v_u2", ("C4dotC4", "v", "u2", 1)),
        ("k23_edge_u1u2", ("K23", "u1", "u2", 0)),
    ):
        table = {("v" + s[1:] if s.startswith("p") else s): tuple(p) for s, p in ATTACH_SMALL_TABLES[key].items()}
        assert {k: tuple(v) for k, v in gold[name]["labels"].items()} == table


# ---------------------------------------------------------------------------
# Three-vertex paths


class TestPath3:
    def test_source_example(self):
        f = {0: P(1, 2), 3: P(1, 3)}
        assert extend_path3(f, [0, 1, 2, 3], 3, 4) == {1: P(3, 4), 2: P(2, 5)}

    def test_equal_ends(self):
        out = extend_path3({0: P(1, 2), 3: P(1, 2)}, [0, 1, 2, 3], 4, 5)
        assert out[1] == P(4, 5) and 3 in out[2]

    def test_disjoint_ends(self):
        with pytest.raises(LemmaError):
            path3_labels(P(1, 2), P(3, 4), 3, 5)

    @given(st.sampled_from(ALL_PAIRS), st.sampled_from(ALL_PAIRS), st.data())
    def test_middle_vertices_satisfied(self, f1, f4, data):
        if not set(f1) & set(f4):
            return
        a, b = data.draw(st.sampled_from(list(itertools.combinations(sorted(FULL - set(f1)), 2))))
        p2, p3 = path3_labels(f1, f4, a, b)
        assert set(f1) | set(p2) | set(p3) == FULL
        assert set(p2) | set(p3) | set(f4) == FULL


# ---------------------------------------------------------------------------
# Attached paths


class TestAttachedPath:
    def test_row_zero(self):
        assert attached_path_labels(P(1, 2), P(1, 2), 3) == [P(1, 3), P(4, 5), P(2, 3)]

    def test_row_two(self):
        expect = [P(3, 4), P(1, 5), P(2, 4), P(1, 3), P(2, 5)]
        assert attached_path_labels(P(1, 2), P(3, 4), 5) == expect

    def test_permuted_row(self):
        f = {0: P(2, 5), 1: P(2, 5)}
        out = extend_attached_path(f, [2, 3, 4], 0, 1)
        g = path_graph_with_anchors(3)
        assert all(is_satisfied(g, out, v) for v in (2, 3, 4))

    def test_short_path_rejected(self):
        with pytest.raises(LemmaError):
            attached_path_labels(P(1, 2), P(1, 2), 2)

    def test_nine_regimes(self):
        assert len(ATTACHED_PATH_TABLE) == 9

    @pytest.mark.parametrize("k", range(3, 13))
    def test_exhaustive(self, k):
        g = path_graph_with_anchors(k)
        for fx, fy in itertools.product(ALL_PAIRS, repeat=2):
            out = extend_attached_path({0: fx, 1: fy}, list(range(2, k + 2)), 0, 1)
            assert all(is_satisfied(g, out, v) for v in range(2, k + 2)), (fx, fy, k)


# ---------------------------------------------------------------------------
# Stars


ADMISSIBLE = [
    (a, b)
    for a in range(6)
    for b in range(6)
    if 2 <= a + b <= 5 and StarSpec(0, ((0, 0),) * a, ((0, 0, 0),) * b).admissible()
]


def star_setup(alpha: int, beta: int):
    w = 0
    nxt = 1
    rays1, rays2, anchors = [], [], []
    for _ in range(alpha):
        rays1.append((nxt, nxt + 1))
        anchors.append(nxt + 1)
        nxt += 2
    for _ in range(beta):
        rays2.append((nxt, nxt + 1, nxt + 2))
        anchors.append(nxt + 2)
        nxt += 3
    spec = StarSpec(w, tuple(rays1), tuple(rays2))
    g = build_graph(nxt, spec.edges())
    return spec, g, anchors


class TestStar:
    def test_admissible_list(self):
        assert (1, 3) in ADMISSIBLE and (0, 3) in ADMISSIBLE and (2, 3) not in ADMISSIBLE
        assert not StarSpec(0, (), ((1, 2, 3),) * 4).admissible()

    def test_all_anchors_equal_beta3(self):
        spec, g, anchors = star_setup(0, 3)
        f = {a: P(1, 2) for a in anchors}
        assert forbidden_pairs(f, spec) == {P(3, 4), P(3, 5), P(4, 5)}
        out = extend_star(f, spec)
        assert out[0] not in forbidden_pairs(f, spec)
        assert all(is_satisfied(g, out, v) for v in spec.vertices())

    def test_one_three_forbids_at_most_eight(self):
        spec, _, anchors = star_setup(1, 3)
        only_long = StarSpec(spec.center, (), spec.rays2)
        for labels in itertools.product(ALL_PAIRS, repeat=4):
            f = dict(zip(anchors, labels))
            assert len(forbidden_pairs(f, only_long)) <= 8
            assert len(forbidden_pairs(f, spec)) < len(ALL_PAIRS)

    def test_three_zero_disjoint_center(self):
        spec, g, anchors = star_setup(3, 0)
        out = extend_star({a: P(1, 2) for a in anchors}, spec)
        assert out[0] == P(3, 4)
        assert all(is_satisfied(g, out, v) for v in spec.vertices())

    def test_inadmissible_rejected(self):
        spec, _, anchors = star_setup(0, 4)
        with pytest.raises(LemmaError):
            extend_star({a: P(1, 2) for a in anchors}, spec)

    @pytest.mark.parametrize("alpha,beta", ADMISSIBLE)
    def test_exhaustive(self, alpha, beta):
        """Every anchor labeling, with the first anchor fixed to {1,2} by symmetry."""
        spec, g, anchors = star_setup(alpha, beta)
        for rest in itertools.product(ALL_PAIRS, repeat=len(anchors) - 1):
            f = dict(zip(anchors, (P(1, 2), *rest)))
            out = extend_star(f, spec)
            bad = [v for v in spec.vertices() if not is_satisfied(g, out, v)]
            assert not bad, (alpha, beta, f)


# ---------------------------------------------------------------------------
# Contraction


class TestContraction:
    def test_c7_to_c4(self):
        red = contract_degree2_path(cycle(7), [0, 1, 2, 3, 4])
        assert red.graph.n == 4 and detect_exceptional(red.graph) is ExceptionalKind.C4

    def test_restored_labels(self):
        assert contracted_path_labels(P(1, 2), P(1, 3)) == (P(1, 3), P(4, 5), P(1, 2))

    def test_equal_ends_use_table(self):
        assert list(contracted_path_labels(P(1, 2), P(1, 2))) == attached_path_labels(P(1, 2), P(1, 2), 3)

    def test_requires_degree_two(self):
        g = build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 5), (5, 0)])
        with pytest.raises(LemmaError):
            contract_degree2_path(g, [0, 1, 2, 3, 4])

    @given(st.integers(3, 7), st.integers(0, 10**6))
    def test_round_trip(self, n_host, seed):
        """Contract the path, configure the reduced graph exactly, lift, verify."""
        rng = random.Random(seed)
        edges = [(i, (i + 1) % n_host) for i in range(n_host)]
        edges += [(u, v) for u in range(n_host) for v in range(u + 2, n_host) if rng.random() < 0.3]
        x, y = rng.sample(range(n_host), 2)
        chain = [x, n_host, n_host + 1, n_host + 2, y]
        g = build_graph(n_host + 3, edges + list(zip(chain, chain[1:])))
        red = contract_degree2_path(g, chain)
        res = exact_solve(red.graph)
        if not res.configurable:
            return
        lifted = red.lift(res.configuration)
        assert verify(g, lifted) == []


# ---------------------------------------------------------------------------
# Small extensions and cycles


class TestSmallExtend:
    def test_one_vertex(self):
        out = small_extend({0: P(1, 2), 1: P(1, 3)}, OneVertex(2, 0, 1))
        assert out[2] == P(4, 5)

    def test_two_vertex(self):
        out = small_extend({0: P(1, 2), 1: P(1, 3)}, TwoVertex(2, 3, 0, 1))
        assert (out[2], out[3]) == (P(3, 4), P(2, 5))
        g = build_graph(4, [(0, 2), (2, 3), (3, 1)])
        assert is_satisfied(g, out, 2) and is_satisfied(g, out, 3)

    def test_one_vertex_needs_distinct(self):
        with pytest.raises(LemmaError):
            small_extend({0: P(1, 2), 1: P(1, 2)}, OneVertex(2, 0, 1))

    @given(st.sampled_from(ALL_PAIRS), st.sampled_from(ALL_PAIRS))
    def test_one_vertex_always_satisfies(self, fx, fy):
        if fx == fy:
            return
        out = small_extend({0: fx, 1: fy}, OneVertex(2, 0, 1))
        assert is_satisfied(build_graph(3, [(0, 2), (2, 1)]), out, 2)


class TestCycles:
    @pytest.mark.parametrize("n", [n for n in range(3, 40) if n not in (4, 7)])
    def test_cycle_config(self, n):
        assert verify(cycle(n), dict(enumerate(cycle_config(n)))) == []

    @pytest.mark.parametrize("n", [4, 7])
    def test_exceptional_cycles(self, n):
        with pytest.raises(LemmaError):
            cycle_config(n)

    def test_c5_plus_two_path(self):
        c = cycle_with_added_path(5, 2, 0, 2)
        assert c.graph.n == 6 and verify(c.graph, c.config) == []

    def test_c6_plus_three_path(self):
        c = cycle_with_added_path(6, 3, 0, 3)
        assert c.config[0] == P(1, 3) and c.config[1] == P(2, 4)

    def test_adjacent_ends_rejected(self):
        with pytest.raises(LemmaError):
            cycle_with_added_path(6, 2, 0, 1)

    @pytest.mark.parametrize("c_len,path_len", [(5, 2), (5, 3), (6, 2), (6, 3)])
    def test_all_nonadjacent_pairs(self, c_len, path_len):
        for i, j in itertools.combinations(range(c_len), 2):
            if (j - i) % c_len in (1, c_len - 1):
                continue
            cycle_with_added_path(c_len, path_len, i, j)


class TestC5TwoTails:
    def _host(self, fx, fy):
        # triangle 0, 1, 2 supplies f(x), f(y) on vertices 0 and 1
        f = {0: fx, 1: fy}
        third = (FULL - set(fx) - set(fy)) or {1}
        f[2] = LabelPair(*sorted(third)[:2]) if len(third) >= 2 else LabelPair(min(third), min(FULL - third))
        return f

    def _graph(self, lp, lq):
        # host triangle 0-1-2, c5 = 3..7, tails after that
        edges = [(0, 1), (1, 2), (2, 0)] + [(3 + i, 3 + (i + 1) % 5) for i in range(5)]
        nxt = 8
        tails = []
        for anchor, end, length in ((0, 3, lp), (1, 5, lq)):
            tail = list(range(nxt, nxt + length))
            nxt += length
            chain = [anchor, *tail, end]
            edges += list(zip(chain, chain[1:]))
            tails.append(tail)
        return build_graph(nxt, edges), tails

    def test_disjoint_anchors(self):
        g, (tp, tq) = self._graph(1, 1)
        out = add_c5_two_tails({0: P(1, 2), 1: P(3, 4)}, 0, 1, tp, tq, [3, 4, 5, 6, 7])
        assert [out[v] for v in range(3, 8)] == [P(1, 3), P(2, 5), P(1, 4), P(3, 5), P(2, 4)]

    def test_equal_anchors(self):
        g, (tp, tq) = self._graph(1, 1)
        out = add_c5_two_tails({0: P(1, 2), 1: P(1, 2)}, 0, 1, tp, tq, [3, 4, 5, 6, 7])
        assert out[3] == P(1, 3) and out[5] == P(1, 4)

    @pytest.mark.parametrize("lp,lq", [(1, 1), (1, 2), (2, 1), (2, 2)])
    def test_new_vertices_satisfied(self, lp, lq):
        g, (tp, tq) = self._graph(lp, lq)
        for fx, fy in itertools.product(ALL_PAIRS, repeat=2):
            out = add_c5_two_tails({0: fx, 1: fy}, 0, 1, tp, tq, [3, 4, 5, 6, 7])
            assert all(is_satisfied(g, out, v) for v in [*range(3, 8), *tp, *tq])


# ---------------------------------------------------------------------------
# Almost-satisfying labelings, tailed cycles, joins


class TestAlmostSatisfy:
    @pytest.mark.parametrize("kind", ["C4", "C7", "C4dotC4", "K23"])
    def test_every_vertex(self, kind):
        kind = ExceptionalKind(kind)
        g = kind.reference()
        for v in range(g.n):
            f = almost_satisfy_exceptional(kind, v)
            assert [u for u in verify(g, f) if u != v] == []
            assert len(missing_colors(g, f, v)) <= almost_tolerance(kind)

    def test_c4_needs_two(self):
        # with one miss allowed C4 still has no labeling
        assert not constrained_solve(cycle(4), need={0: 4}).configurable

    def test_other_kinds_rejected(self):
        with pytest.raises(LemmaError):
            almost_satisfy_exceptional(ExceptionalKind.G1, 0)


class TestTailedCycle:
    def test_c4_host_c5(self):
        # w1 is adjacent to u0, so the union has 4 + 5 vertices
        c = extend_tailed_cycle(ExceptionalKind.C4, 0, 0, 5)
        assert c.graph.n == 9 and c.graph.has_edge(0, 4)

    def test_c7_host_one_tail(self):
        c = extend_tailed_cycle(ExceptionalKind.C7, 0, 1, 3)
        assert c.config[7] == P(3, 4)

    def test_c3_host(self):
        c = extend_tailed_cycle(cycle(3), 0, 2, 4)
        assert c.config[3] == P(3, 4) and c.config[4] == P(1, 5)

    @pytest.mark.parametrize("host", ["C4", "C7"])
    @pytest.mark.parametrize("k", range(0, 7))
    @pytest.mark.parametrize("m", range(3, 11))
    def test_grid(self, host, k, m):
        c = extend_tailed_cycle(ExceptionalKind(host), 0, k, m)
        assert verify(c.graph, c.config) == []


class TestJoin:
    def test_middle_vertex(self):
        # C7 side misses one label at its end, C4 side misses two
        f1 = almost_satisfy_exceptional(ExceptionalKind.C7, 0)
        f2 = almost_satisfy_exceptional(ExceptionalKind.C4, 0)
        c = join_via_path(cycle(7), f1, 0, cycle(4), f2, 0, 3)
        (mid,) = c.roles["path"]
        assert verify(c.graph, c.config) == []
        m1 = missing_colors(cycle(7), f1, 0)
        assert m1 <= set(c.config[mid])

    def test_shared_vertex(self):
        f = dict(enumerate(C5_PATTERN))
        c = join_via_path(cycle(5), f, 0, cycle(5), f, 2, 1)
        assert c.graph.n == 9 and verify(c.graph, c.config) == []

    def test_two_c7_fragments(self):
        f = almost_satisfy_exceptional(ExceptionalKind.C7, 0)
        c = join_via_path(cycle(7), f, 0, cycle(7), f, 0, 4)
        assert verify(c.graph, c.config) == []

    @pytest.mark.parametrize("a,b", list(itertools.combinations_with_replacement(["C4", "C7", "C4dotC4", "K23"], 2)))
    @pytest.mark.parametrize("inner", range(0, 8))
    def test_exceptional_pairs_relaxed(self, a, b, inner):
        ka, kb = ExceptionalKind(a), ExceptionalKind(b)
        ga, gb = ka.reference(), kb.reference()
        edges = list(ga.edges()) + [(u + ga.n, v + ga.n) for u, v in gb.edges()]
        path_ids = list(range(ga.n + gb.n, ga.n + gb.n + inner))
        chain = [0, *path_ids, ga.n]
        g = build_graph(ga.n + gb.n + inner, edges + list(zip(chain, chain[1:])))
        f1 = almost_satisfy_exceptional(ka, 0)
        f2 = {v + ga.n: p for v, p in almost_satisfy_exceptional(kb, 0).items()}
        out = join_configs(g, f1, 0, f2, ga.n, path_ids, strict=False)
        assert verify(g, out) == []

    def test_strict_rejects_double_c4(self):
        f = almost_satisfy_exceptional(ExceptionalKind.C4, 0)
        g = build_graph(8, list(cycle(4).edges()) + [(u + 4, v + 4) for u, v in cycle(4).edges()] + [(0, 4)])
        with pytest.raises(LemmaError):
            join_configs(g, f, 0, {v + 4: p for v, p in f.items()}, 4, [])


# ---------------------------------------------------------------------------
# Attaching paths to cycles and small exceptional graphs


class TestAttachCycle:
    def test_c4_case_two(self):
        c = attach_path_to_cycle(4, 4, 0, 2)
        assert c.config[1] == P(3, 5) and verify(c.graph, c.config) == []

    def test_refuses_c4_dot_c4(self):
        assert attach_path_to_cycle(4, 3, 0, 0) is ExceptionalKind.C4dotC4

    def test_c7_case_four(self):
        c = attach_path_to_cycle(7, 4, 0, 5)
        assert c.config[10] == P(1, 2)

    @pytest.mark.parametrize("m", [3, 4, 5, 6, 7, 8])
    @pytest.mark.parametrize("k", [3, 4, 5, 6, 7])
    def test_grid(self, m, k):
        for x, y in itertools.combinations_with_replacement(range(m), 2):
            out = attach_path_to_cycle(m, k, x, y)
            if isinstance(out, ExceptionalKind):
                assert out in (ExceptionalKind.C4dotC4, ExceptionalKind.G1)
                continue
            assert verify(out.graph, out.config) == []


class TestAttachSmall:
    def test_c4c4_loop_at_u2(self):
        c = attach_path_to_small("C4dotC4", 3, 2, 2)
        assert c.config[0] == P(3, 4) and c.config[4] == P(1, 3)

    def test_k23_edge(self):
        c = attach_path_to_small("K23", 0, 0, 1)
        assert [c.config[v] for v in range(5)] == [P(1, 2), P(3, 4), P(1, 5), P(1, 5), P(1, 5)]

    def test_c4c4_v_to_u2(self):
        c = attach_path_to_small("C4dotC4", 1, 0, 2)
        assert c.config[0] == P(1, 2) and c.config[1] == P(4, 5)

    def test_exceptional_outcomes(self):
        assert attach_path_to_small("C4dotC4", 0, 1, 4) is ExceptionalKind.G3
        assert attach_path_to_small("K23", 2, 2, 3) is ExceptionalKind.G2

    @pytest.mark.parametrize("base", ["C4dotC4", "K23"])
    @pytest.mark.parametrize("k", range(0, 8))
    def test_grid(self, base, k):
        host = ExceptionalKind(base).reference()
        for x, y in itertools.combinations_with_replacement(range(host.n), 2):
            if (x == y and k < 2) or (k == 0 and host.has_edge(x, y)):
                continue
            out = attach_path_to_small(base, k, x, y)
            if isinstance(out, ExceptionalKind):
                assert not exact_solve(out.reference()).configurable
                continue
            assert verify(out.graph, out.config) == []


class TestK24:
    def test_labels(self):
        c = k24_config()
        assert [c.config[v] for v in range(6)] == list(K24_LABELS)

    def test_k23_fails(self):
        f = {v: p for v, p in k24_config().config.items() if v != 5}
        assert verify(complete_bipartite(2, 3), f)


def test_c7_star_construction():
    c = c7_star_config()
    assert isinstance(c, Construction) and c.config[0] == P(1, 2) and c.config[1] == P(4, 5)
