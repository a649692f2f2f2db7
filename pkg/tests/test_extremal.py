import random
from fractions import Fraction
from itertools import combinations
from math import comb

import pytest

from bergecycles.berge import has_berge_cycle_geq
from bergecycles.errors import InvalidInputError, ParameterError
from bergecycles.extremal import (
    BlockTreeSpec,
    a_r_w,
    all_attachment_patterns,
    block_characterization,
    bounds_table,
    bounds_table_csv,
    build_block_tree,
    c_r_k,
    check_path_bounds,
    cycle_bound,
    erdos_gallai_cycle_bound,
    erdos_gallai_path_bound,
    verify_degree_inequality,
    verify_gkl_path_bound,
    verify_shadow_inequality,
)
from bergecycles.hypergraph import Hypergraph, complete_r_graph, shadow_complement
from bergecycles.verdict import HOLDS, NOT_APPLICABLE, VIOLATION


class TestCoefficients:
    def test_c3_6(self):
        assert c_r_k(6, 3) == Fraction(5, 2)

    @pytest.mark.parametrize("k", range(4, 12))
    def test_graph_case(self, k):
        assert c_r_k(k, 2) == Fraction(k - 1, 2)

    def test_c4_7(self):
        assert c_r_k(7, 4) == 3

    def test_bound_on_block_tree_sizes(self):
        # K_5^(3) alone: n = 5, bound 4 * 5/2 = 10 = C(5, 3)
        assert cycle_bound(5, 6, 3) == 10

    def test_parameter_errors(self):
        with pytest.raises(ParameterError):
            c_r_k(2, 3)

    def test_table(self):
        rows = bounds_table([3], [6, 7])
        assert rows == [(6, 3, Fraction(5, 2)), (7, 3, Fraction(4))]
        assert bounds_table_csv(rows) == "k,r,C_r(k)\n6,3,5/2\n7,3,4\n"


class TestAr:
    @pytest.mark.parametrize("w,r,expected", [(4, 3, 6), (5, 3, 10), (6, 3, 20), (7, 3, 35), (6, 4, 15), (7, 4, 35)])
    def test_values(self, w, r, expected):
        assert a_r_w(w, r) == expected

    @pytest.mark.parametrize("r", [3, 4, 5])
    def test_branches_meet(self, r):
        # at w = r + 2 both formulas agree
        assert comb(r + 2, 2) == comb(r + 2, r) == a_r_w(r + 2, r)


class TestDegreeInequality:
    def test_holds(self):
        v = verify_degree_inequality(6, 3)
        assert v.status == HOLDS and v.details["max_lhs"] == 2

    def test_holds_larger(self):
        assert verify_degree_inequality(10, 4).status == HOLDS

    def test_breaks_at_r_plus_2(self):
        v = verify_degree_inequality(5, 3)
        assert v.status == VIOLATION and v.details["mode"] == "boundary"
        assert v.details["counterexample"]["lhs"] == 2 > c_r_k(5, 3)

    @pytest.mark.parametrize("r", range(3, 11))
    def test_breaks_for_every_r(self, r):
        v = verify_degree_inequality(r + 2, r)
        assert v.status == VIOLATION and v.details["max_lhs"] == (r + 1) // 2

    def test_params(self):
        with pytest.raises(ParameterError):
            verify_degree_inequality(4, 3)
        with pytest.raises(ParameterError):
            verify_degree_inequality(8, 2)


class TestShadowInequality:
    def test_complete(self):
        v = verify_shadow_inequality(complete_r_graph(6, 3), k=7)
        assert v.status == HOLDS and v.equality
        assert v.details["branch"] == "H-complete" and v.details["characterization"]

    def test_empty_at_r_plus_2(self):
        v = verify_shadow_inequality(Hypergraph(5, 3), k=6)
        assert v.details["lhs"] == 10 == v.details["a_r_w"]
        assert v.status == HOLDS and v.equality and v.details["branch"] == "complement-complete"

    def test_mixed_strict(self):
        v = verify_shadow_inequality(Hypergraph(6, 3, [(1, 2, 3)]), k=7)
        assert v.status == HOLDS and not v.equality

    def test_second_inequality_not_applicable(self):
        v = verify_shadow_inequality(complete_r_graph(5, 3), k=9)
        assert v.details["cap_equals_rhs"] is False
        assert verify_shadow_inequality(complete_r_graph(6, 3), k=6).details["second"] == "not-applicable"

    def test_k_too_small(self):
        with pytest.raises(ParameterError):
            verify_shadow_inequality(Hypergraph(4, 3), k=5)

    def test_exhaustive_w5(self):
        universe = list(combinations(range(1, 6), 3))
        for mask in range(1 << len(universe)):
            H = Hypergraph(5, 3, [e for i, e in enumerate(universe) if mask >> i & 1])
            lhs = len(H) + len(shadow_complement(H))
            assert lhs <= 10
            v = verify_shadow_inequality(H, k=6)
            assert v.status == HOLDS
            if lhs == 10:
                assert len(H) in (0, 10)


class TestBlockTree:
    def test_single_block(self):
        H = build_block_tree(BlockTreeSpec(6, 3))
        assert H.n == 5 and len(H) == 10

    def test_chain(self):
        spec = BlockTreeSpec.chain(6, 3, 2)
        H = build_block_tree(spec)
        assert H.n == 9 and len(H) == 20 == cycle_bound(9, 6, 3)
        assert not has_berge_cycle_geq(H, 6, max_n=64, max_edges=20)[0]
        assert block_characterization(H, 6)["holds"]

    def test_star(self):
        H = build_block_tree(BlockTreeSpec.star(7, 4, 3))
        assert H.n == 16 and len(H) == 45 == cycle_bound(16, 7, 4)

    def test_pattern_count(self):
        assert sum(1 for _ in all_attachment_patterns(6, 3, 3)) == 5 * 10

    def test_bad_attachment(self):
        with pytest.raises(InvalidInputError):
            build_block_tree(BlockTreeSpec(6, 3, ((1, 0),)))

    def test_characterization_fails_off_family(self):
        assert not block_characterization(complete_r_graph(6, 3), 6)["holds"]
        H = build_block_tree(BlockTreeSpec(6, 3)).without_edges([(1, 2, 3)])
        assert not block_characterization(H, 6)["holds"]


class TestPathBounds:
    def test_k6_complete(self):
        v = check_path_bounds(complete_r_graph(6, 3), 6)
        assert v.status == HOLDS and v.equality
        g = v.details["checks"]["general"]
        assert g["bound"] == "20" and g["components_complete"]

    def test_connected_mode_rejects_disconnected(self):
        H = Hypergraph(7, 3, [(1, 2, 3)])
        with pytest.raises(InvalidInputError):
            check_path_bounds(H, 6, mode="connected")

    def test_two_copies(self):
        k6 = complete_r_graph(6, 3)
        H = Hypergraph(12, 3, list(k6.edges) + [tuple(v + 6 for v in e) for e in k6.edges])
        v = check_path_bounds(H, 6, mode="general", max_edges=40)
        assert v.status == HOLDS and v.equality

    def test_long_path_is_not_applicable(self):
        assert check_path_bounds(complete_r_graph(7, 3), 6, max_edges=35).status == NOT_APPLICABLE


class TestGkl:
    def test_long_regime(self):
        v = verify_gkl_path_bound(complete_r_graph(5, 3), 5)
        assert v.details["regime"] == "long" and v.status == HOLDS and v.equality

    def test_short_regime(self):
        v = verify_gkl_path_bound(Hypergraph(5, 4, [(1, 2, 3, 4)]), 3)
        assert v.details["regime"] == "short" and v.status == HOLDS

    def test_gap(self):
        assert verify_gkl_path_bound(complete_r_graph(5, 3), 4).status == NOT_APPLICABLE

    def test_random(self):
        rng = random.Random(13)
        for _ in range(40):
            n = rng.randint(4, 8)
            edges = rng.sample(list(combinations(range(1, n + 1), 3)), rng.randint(0, 5))
            for k in (3, 5, 6):
                assert verify_gkl_path_bound(Hypergraph(n, 3, edges), k).ok


def test_erdos_gallai_formulas():
    assert erdos_gallai_cycle_bound(5, 5) == 8
    assert erdos_gallai_path_bound(6, 4) == 6
