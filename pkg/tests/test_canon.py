import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bergecycles.canon import canonical_form, graph_classes, isomorphism_classes
from bergecycles.errors import BudgetExceeded
from bergecycles.hypergraph import Hypergraph, SimpleGraph

from oracles import isomorphic, random_hypergraph


def test_same_edge_set_same_label():
    assert canonical_form(Hypergraph(3, 3, [(1, 2, 3)])) == canonical_form(Hypergraph(3, 3, [(1, 3, 2)]))


def test_relabeling():
    assert canonical_form(Hypergraph(4, 3, [(1, 2, 3)])) == canonical_form(Hypergraph(4, 3, [(2, 3, 4)]))


def test_distinct_intersection_patterns():
    a = Hypergraph(5, 3, [(1, 2, 3), (1, 2, 4)])
    b = Hypergraph(5, 3, [(1, 2, 3), (1, 4, 5)])
    assert not isomorphic(a, b)  # all 120 permutations checked
    assert canonical_form(a) != canonical_form(b)


def test_budget():
    with pytest.raises(BudgetExceeded):
        canonical_form(Hypergraph(13, 3))
    assert canonical_form(Hypergraph(13, 3), max_n=13)


@settings(max_examples=80, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_invariant_under_random_permutation(seed):
    rng = random.Random(seed)
    n = rng.randint(3, 9)
    r = rng.choice([2, 3, 4]) if n >= 4 else 3
    H = random_hypergraph(rng, n, r, rng.randint(0, 14))
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    relabeled = H.relabel(dict(zip(range(1, n + 1), perm)))
    assert canonical_form(H) == canonical_form(relabeled)


def test_labels_separate_non_isomorphic_pairs():
    rng = random.Random(7)
    for _ in range(150):
        a = random_hypergraph(rng, 5, 3, 4)
        b = random_hypergraph(rng, 5, 3, 4)
        assert (canonical_form(a) == canonical_form(b)) == isomorphic(a, b)


def test_simple_graph_accepted():
    g1 = SimpleGraph(4, [(1, 2), (2, 3)])
    g2 = SimpleGraph(4, [(3, 4), (4, 1)])
    assert canonical_form(g1) == canonical_form(g2)


# OEIS A000088 (graphs) and A000665 (3-uniform hypergraphs) up to isomorphism
@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
def test_graph_class_counts(n, count):
    assert len(graph_classes(n)) == count


@pytest.mark.parametrize("n,count", [(3, 2), (4, 5), (5, 34)])
def test_three_graph_class_counts(n, count):
    assert len(isomorphism_classes(n, 3)) == count
