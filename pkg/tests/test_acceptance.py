"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line."""

import random
import time
from fractions import Fraction
from itertools import combinations
from math import comb, floor

from bergecycles.berge import check_long_cycle_spans, has_berge_cycle_geq
from bergecycles.canon import graph_classes
from bergecycles.extremal import (
    all_attachment_patterns,
    build_block_tree,
    c_r_k,
    check_path_bounds,
    verify_gkl_path_bound,
    verify_degree_inequality,
    verify_shadow_inequality,
)
from bergecycles.graphs import (
    has_long_path_between,
    is_two_connected,
    kopylov_witness,
    longest_cycle,
    longest_path,
    saturate_no_long_cycle,
    simple_cycles,
)
from bergecycles.hypergraph import Hypergraph, SimpleGraph, complete_r_graph, shadow, shadow_complement
from bergecycles.sdrp import auxiliary_graph, lift_to_berge, saturated_sdrp, verify_surplus
from bergecycles.search import BoundParams, search_max_edges
from bergecycles.verdict import HOLDS, VIOLATION

from oracles import random_connected_hypergraph, random_hypergraph, surplus_violators


def report(capsys, number, ok, summary, started):
    line = f"ACCEPTANCE {number:>2} {'PASS' if ok else 'FAIL'} ({time.perf_counter() - started:.1f}s): {summary}"
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


def test_01_block_tree_tightness(capsys):
    start = time.perf_counter()
    checked, bad = 0, []
    for r in (3, 4):
        for k in (r + 3, r + 4):
            for p in (1, 2, 3):
                for spec in all_attachment_patterns(k, r, p):
                    H = build_block_tree(spec)
                    target = c_r_k(k, r) * (H.n - 1)
                    found, _ = has_berge_cycle_geq(H, k, max_n=64, max_edges=len(H))
                    if Fraction(len(H)) != target or found or H.n - 1 != p * (k - 2):
                        bad.append(spec)
                    checked += 1
    report(capsys, 1, not bad, f"{checked} block trees have exactly C_r(k)(n-1) edges and no Berge cycle >= k",
           start)


def test_02_exhaustive_certification(capsys):
    start = time.perf_counter()
    five = search_max_edges(BoundParams(5, 3, 6))
    six = search_max_edges(BoundParams(6, 3, 6))
    ok = (five.max_edges_found == 10 and five.exhaustive
          and six.max_edges_found <= 12 and six.exhaustive)
    report(capsys, 2, ok, f"r=3 k=6: n=5 max {five.max_edges_found} (exhaustive={five.exhaustive}), "
           f"n=6 max {six.max_edges_found} <= 12 (exhaustive={six.exhaustive}, "
           f"{six.isomorphism_classes_visited} classes)", start)


def test_03_conjecture_probe(capsys):
    start = time.perf_counter()
    parts, ok = [], True
    for n in (4, 5, 6):
        rep = search_max_edges(BoundParams(n, 3, 5, "conjecture"))
        cap = floor(Fraction(4, 3) * (n - 1))
        witness_ok = len(rep.witness) == rep.max_edges_found and not has_berge_cycle_geq(rep.witness, 5)[0]
        ok &= rep.exhaustive and witness_ok
        parts.append(f"n={n} max {rep.max_edges_found} vs floor(4(n-1)/3)={cap} "
                     f"{'within' if rep.max_edges_found <= cap else 'ABOVE'}")
    report(capsys, 3, ok, "k=r+2=5 exhaustive with witnesses; " + "; ".join(parts), start)


def test_04_degree_inequality_sweep(capsys):
    start = time.perf_counter()
    failures = [(k, r) for r in range(3, 11) for k in range(r + 3, 31) if verify_degree_inequality(k, r).status != HOLDS]
    # independent recomputation of the maximum over 0 <= a <= s <= t
    for r in range(3, 11):
        for k in range(r + 3, 31):
            t = (k - 1) // 2
            worst = max(a + comb(s - a, r - 1) for s in range(t + 1) for a in range(s + 1))
            if Fraction(worst) > Fraction(comb(k - 1, r), k - 2):
                failures.append((k, r, "oracle"))
    boundary = verify_degree_inequality(5, 3)
    ok = not failures and boundary.status == VIOLATION
    report(capsys, 4, ok, f"holds for all 3<=r<=10, r+3<=k<=30; (r=3, k=5) fails with "
           f"{boundary.details.get('counterexample')}", start)


def _first_equality_expected(H):
    w, r = H.n, H.r
    full, empty = len(H) == comb(w, r), len(H) == 0
    if w <= r + 1:
        return empty
    if w == r + 2:
        return full or empty
    return full


def _shadow_instance(H, problems, tally):
    w, r = H.n, H.r
    cap = comb(w, 2) if w <= r + 2 else comb(w, r)
    lhs = len(H) + len(shadow_complement(H))
    k = max(w + 1, r + 3)
    v = verify_shadow_inequality(H, k=k)
    eq = lhs == cap
    if lhs > cap or v.status != HOLDS or eq != _first_equality_expected(H):
        problems.append(H)
    chain = Fraction(lhs) == c_r_k(k, r) * (w - 1)
    if chain:
        tally["chain_equalities"] += 1
        if not (w == k - 1 and _first_equality_expected(H)):
            problems.append(H)
    tally["instances"] += 1


def test_05_shadow_inequality_suite(capsys):
    start = time.perf_counter()
    problems, tally = [], {"instances": 0, "chain_equalities": 0}
    for w in (3, 4, 5):
        universe = list(combinations(range(1, w + 1), 3))
        for mask in range(1 << len(universe)):
            H = Hypergraph(w, 3, [e for i, e in enumerate(universe) if mask >> i & 1])
            _shadow_instance(H, problems, tally)
    rng = random.Random(0)
    universe = list(combinations(range(1, 7), 3))
    samples = [complete_r_graph(6, 3), Hypergraph(6, 3)]
    for _ in range(10_000):
        mask = rng.getrandbits(len(universe))
        samples.append(Hypergraph(6, 3, [e for i, e in enumerate(universe) if mask >> i & 1]))
    for H in samples:
        _shadow_instance(H, problems, tally)
    report(capsys, 5, not problems, f"{tally['instances']} instances (w<=5 exhaustive, w=6 sampled) obey "
           f"|H|+uncovered <= a_3(w); {tally['chain_equalities']} equality cases match the characterization",
           start)


def test_06_sdrp_lifting(capsys):
    start = time.perf_counter()
    rng = random.Random(0)
    failures, cross_checked, nonempty, lifted = [], 0, 0, 0
    for _ in range(200):
        r = rng.choice((3, 4))
        n = rng.randint(r, 8)
        H = random_hypergraph(rng, n, r, rng.randint(0, comb(n, r)))
        s, part = saturated_sdrp(H)
        try:
            s.validate()
        except Exception as exc:  # recorded, not raised, so every instance is tried
            failures.append((H, repr(exc)))
            continue
        shadow_ok = set(part.residual_shadow) == shadow(Hypergraph(n, r, part.residual_edges), 2)
        if not (verify_surplus(part, "matching") and shadow_ok):
            failures.append((H, "surplus"))
        nonempty += bool(part.residual_edges)
        if len(part.residual_shadow) <= 20:
            cross_checked += 1
            if not verify_surplus(part, "enumeration") or (
                    len(part.residual_shadow) <= 12
                    and surplus_violators(part.residual_edges, part.residual_shadow)):
                failures.append((H, "enumeration"))
        for cyc in simple_cycles(auxiliary_graph(s, part)):
            ell = len(cyc)
            emb = lift_to_berge([(cyc[i], cyc[(i + 1) % ell]) for i in range(ell)], s, part,
                                base=cyc, kind="cycle")
            if not emb.is_valid(H) or list(emb.base) != list(cyc):
                failures.append((H, cyc))
            lifted += 1
    report(capsys, 6, not failures, f"200 hypergraphs ({nonempty} with nonempty residual): SDRP invariants and "
           f"surplus hold ({cross_checked} cross-checked by enumeration); {lifted} auxiliary cycles lifted", start)


def test_07_erdos_gallai(capsys):
    start = time.perf_counter()
    bad, count = [], 0
    for n in range(1, 8):
        for G in graph_classes(n):
            c, _ = longest_cycle(G)
            p, _ = longest_path(G)
            e = len(G.edges)
            for k in range(3, n + 2):
                if c < k and 2 * e > (k - 1) * (n - 1):
                    bad.append((G, k, "cycle"))
                # no path with k - 1 edges, i.e. none on k vertices
                if p < k - 1 and 2 * e > (k - 2) * n:
                    bad.append((G, k, "path"))
            count += 1
    report(capsys, 7, not bad, f"{count} graph classes on n<=7 obey both edge bounds for 3<=k<=n+1", start)


def _random_saturated(rng, n, k):
    # K_{2,n-2} has circumference 4; one pass in random order saturates it
    verts = list(range(1, n + 1))
    rng.shuffle(verts)
    a, b, rest = verts[0], verts[1], verts[2:]
    G = SimpleGraph(n, [(min(x, v), max(x, v)) for v in rest for x in (a, b)])
    nonedges = list(G.nonedges())
    rng.shuffle(nonedges)
    for u, v in nonedges:
        if not has_long_path_between(G, u, v, k - 1):
            G = G.with_edges([(u, v)])
    return G


def test_08_kopylov(capsys):
    start = time.perf_counter()
    errors, cases = [], {}
    for n in (5, 6, 7):
        for G in graph_classes(n):
            if not is_two_connected(G):
                continue
            for k in (5, 6):
                if n < k or longest_cycle(G)[0] >= k:
                    continue
                S = saturate_no_long_cycle(G, k)
                try:
                    w = kopylov_witness(S, k)
                    w.validate(S)
                    if w.case == "core" and not (2 <= k - w.s <= w.t):
                        raise AssertionError("side condition")
                    cases[w.case] = cases.get(w.case, 0) + 1
                except Exception as exc:
                    errors.append((G, k, repr(exc)))
    rng = random.Random(0)
    for i in range(500):
        k = 5 + i % 2
        S = _random_saturated(rng, 8, k)
        try:
            w = kopylov_witness(S, k)
            w.validate(S)
            cases[w.case] = cases.get(w.case, 0) + 1
        except Exception as exc:
            errors.append((S, k, repr(exc)))
    report(capsys, 8, not errors, f"witnesses validated: {cases}; {len(errors)} consistency errors", start)


def test_09_long_cycle_spans(capsys):
    start = time.perf_counter()
    rng = random.Random(0)
    violations, applicable, calls = [], 0, 0
    for _ in range(500):
        n = rng.randint(3, 8)
        H = random_connected_hypergraph(rng, n, 3, rng.randint(1, 10))
        for k in range(2, n + 2):
            v = check_long_cycle_spans(H, k)
            calls += 1
            applicable += v.status != "not-applicable"
            if v.status == VIOLATION:
                violations.append((H, k))
    report(capsys, 9, not violations and applicable > 0,
           f"500 connected hypergraphs, {calls} (H, k) checks, {applicable} applicable, "
           f"{len(violations)} violations", start)


def _random_disjoint_union(rng, n, r, max_edges):
    cut = rng.randint(r, n - r) if n >= 2 * r else n
    edges = []
    for lo, hi in ((1, cut), (cut + 1, n)):
        if hi - lo + 1 >= r:
            pool = list(combinations(range(lo, hi + 1), r))
            edges += rng.sample(pool, min(len(pool), rng.randint(0, max_edges)))
    return Hypergraph(n, r, edges)


def test_10_path_bounds(capsys):
    start = time.perf_counter()
    k6 = complete_r_graph(6, 3)
    v = check_path_bounds(k6, 6, mode="general")
    g = v.details["checks"]["general"]
    ok = v.status == HOLDS and v.equality and g["bound"] == "20" and g["components_complete"]
    ok &= len(k6) == 20 == Fraction(6, 6) * comb(6, 3)
    rng = random.Random(0)
    regimes = {"connected": [0, 0], "general": [0, 0], "long": [0, 0], "short": [0, 0]}
    bad = []

    def run(name, verdict):
        regimes[name][0] += 1
        regimes[name][1] += verdict.status == HOLDS
        if verdict.status == VIOLATION:
            bad.append((name, verdict))

    for _ in range(200):
        H = random_connected_hypergraph(rng, rng.randint(7, 10), 3, rng.randint(3, 7))
        run("connected", check_path_bounds(H, 6, mode="connected"))
    for _ in range(200):
        H = _random_disjoint_union(rng, rng.randint(6, 10), 3, 8)
        run("general", check_path_bounds(H, 6, mode="general"))
    for _ in range(200):
        k = rng.choice((5, 6))
        H = _random_disjoint_union(rng, rng.randint(k, 10), 3, 8)
        run("long", verify_gkl_path_bound(H, k))
    for _ in range(200):
        r = rng.choice((3, 4))
        k = rng.randint(3, r)
        n = rng.randint(r, 9)
        run("short", verify_gkl_path_bound(random_hypergraph(rng, n, r, rng.randint(0, 6)), k))
    ok &= not bad and all(applied > 0 for _, applied in regimes.values())
    summary = ", ".join(f"{k}: {a}/{t} applicable" for k, (t, a) in regimes.items())
    report(capsys, 10, ok, f"K_6^(3) attains 20 = C(6,3) as one complete component; {summary}; "
           f"{len(bad)} violations", start)
