from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pairconfig.graph import build_graph, complete_bipartite, cycle, path
from pairconfig.labeling import (
    ALL_PAIRS,
    LabelingError,
    LabelPair,
    RConfiguration,
    all_permutations,
    as_config,
    canonical_form,
    config_to_json,
    equal_up_to_permutation,
    format_config,
    is_satisfied,
    missing_colors,
    parse_config,
    permutation_mapping,
    permute_labels,
    r_size,
    verify,
    verify_r_configuration,
)
from pairconfig.oracle import exact_solve

from conftest import graphs

C5_LABELS = as_config({0: (1, 4), 1: (2, 5), 2: (3, 1), 3: (4, 2), 4: (5, 3)})

pairs = st.sampled_from(ALL_PAIRS)
perms = st.sampled_from(all_permutations())


def labelings(g):
    return st.fixed_dictionaries({v: pairs for v in range(g.n)})


class TestLabelPair:
    def test_normalized(self):
        assert LabelPair(4, 2) == (2, 4)

    @pytest.mark.parametrize("a,b", [(1, 1), (0, 2), (3, 6)])
    def test_invalid(self, a, b):
        with pytest.raises(LabelingError):
            LabelPair(a, b)

    def test_ten_pairs_in_order(self):
        assert len(ALL_PAIRS) == 10 and list(ALL_PAIRS) == sorted(ALL_PAIRS)


class TestSatisfaction:
    def test_c5_pattern(self):
        g = cycle(5)
        assert all(is_satisfied(g, C5_LABELS, v) for v in range(5))

    def test_c4_all_same(self):
        g = cycle(4)
        f = {v: LabelPair(1, 2) for v in range(4)}
        assert not any(is_satisfied(g, f, v) for v in range(4))

    def test_k24(self):
        g = complete_bipartite(2, 4)
        f = as_config({0: (1, 2), 1: (3, 4), 2: (3, 5), 3: (4, 5), 4: (1, 5), 5: (2, 5)})
        assert verify(g, f) == []

    def test_missing_on_c4(self):
        g = cycle(4)
        f = {v: LabelPair(1, 2) for v in range(4)}
        assert all(missing_colors(g, f, v) == {3, 4, 5} for v in range(4))

    def test_missing_isolated(self):
        assert missing_colors(build_graph(1, []), {0: LabelPair(2, 5)}, 0) == {1, 3, 4}

    def test_missing_partial(self):
        assert missing_colors(path(2), {0: LabelPair(1, 2)}, 0) == {3, 4, 5}

    def test_verify_c5(self):
        assert verify(cycle(5), C5_LABELS) == []

    def test_verify_c3(self):
        assert verify(cycle(3), as_config({0: (1, 2), 1: (3, 4), 2: (5, 1)})) == []

    @given(st.data())
    def test_c7_never_verifies(self, data):
        g = cycle(7)
        assert verify(g, data.draw(labelings(g)))


class TestPermutations:
    def test_identity(self):
        ident = {i: i for i in range(1, 6)}
        assert permute_labels(C5_LABELS, ident) == C5_LABELS

    def test_swap_keeps_c5_valid(self):
        sigma = {1: 2, 2: 1, 3: 3, 4: 4, 5: 5}
        assert verify(cycle(5), permute_labels(C5_LABELS, sigma)) == []

    @given(graphs(min_n=2, max_n=7, p=0.5), st.data(), perms)
    def test_satisfaction_invariant(self, g, data, sigma):
        f = data.draw(labelings(g))
        assert verify(g, permute_labels(f, sigma)) == verify(g, f)

    @given(st.data(), perms)
    def test_canonical_form_invariant(self, data, sigma):
        f = data.draw(labelings(cycle(6)))
        assert canonical_form(f) == canonical_form(permute_labels(f, sigma))
        assert equal_up_to_permutation(f, permute_labels(f, sigma))

    def test_mapping_is_least(self):
        sigma = permutation_mapping([({1, 2}, {2, 5})])
        assert permute_labels({0: LabelPair(1, 2)}, sigma)[0] == (2, 5)
        assert sigma == {1: 2, 2: 5, 3: 1, 4: 3, 5: 4}

    def test_mapping_impossible(self):
        assert permutation_mapping([({1, 2}, {3, 4}), ({1, 3}, {1, 2})]) is None

    def test_not_a_permutation(self):
        with pytest.raises(LabelingError):
            permute_labels(C5_LABELS, {1: 1, 2: 1, 3: 3, 4: 4, 5: 5})


class TestRConfigurations:
    def test_r1_from_independent_set(self):
        g = cycle(6)
        indep = {0, 2, 4}
        h = RConfiguration(1, {v: frozenset({1 if v in indep else 2}) for v in range(6)}, frozenset({1, 2}))
        assert verify_r_configuration(g, h) and r_size(h) == 2

    def test_r2_c5_pattern(self):
        rc = RConfiguration(2, {v: frozenset(p) for v, p in C5_LABELS.items()}, frozenset(range(1, 6)))
        assert verify_r_configuration(cycle(5), rc) and r_size(rc) == 5

    def test_r2_on_c4_at_most_four(self):
        g = cycle(4)
        best = 0
        for combo in itertools.product(ALL_PAIRS, repeat=4):
            rc = RConfiguration(2, {v: frozenset(p) for v, p in enumerate(combo)}, frozenset(range(1, 6)))
            if verify_r_configuration(g, rc):
                best = max(best, r_size(rc))
        assert best == 4

    def test_wrong_size_rejected(self):
        with pytest.raises(LabelingError):
            RConfiguration(2, {0: frozenset({1})}, frozenset({1, 2}))

    def test_partial_rejected(self):
        rc = RConfiguration(1, {0: frozenset({1})}, frozenset({1}))
        with pytest.raises(LabelingError):
            verify_r_configuration(path(2), rc)


class TestSerialization:
    @given(st.data())
    def test_text_round_trip(self, data):
        f = data.draw(labelings(cycle(8)))
        assert parse_config(format_config(f)) == f

    def test_json_round_trip(self):
        import json

        assert parse_config(json.dumps(config_to_json(C5_LABELS))) == C5_LABELS

    def test_text_format(self):
        assert format_config({3: LabelPair(5, 2)}) == "3: 2 5\n"

    @pytest.mark.parametrize("text", ["0: 1 1\n", "0 1 2\n", "x: 1 2\n", "0: 1 2 3\n"])
    def test_bad_lines(self, text):
        with pytest.raises(LabelingError, match="line 1"):
            parse_config(text)


def test_oracle_witnesses_verify():
    for n in (3, 5, 6, 8):
        res = exact_solve(cycle(n))
        assert verify(cycle(n), res.configuration) == []
