"""Graph-side operations against hand enumerations and networkx oracles."""

import random
from itertools import combinations

import networkx as nx
import pytest

from stabletoric.graphs import (GraphFormatError, LoopGraph, SimpleGraph, Walk,
                                bridges_between, clique_sum, complement, family,
                                format_graph, induced_cycles, induced_subgraph,
                                is_bipartite, is_chordal, is_perfect, is_ring_graph,
                                odd_cycle_condition, parse_graph, stability_number,
                                stable_sets, star_graph)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(1, g.n + 1))
    h.add_edges_from(g.edges)
    return h


def random_graph(rng, n, p=0.5):
    edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < p]
    return SimpleGraph.from_edges(n, edges)


def brute_stable_sets(g):
    """Independent oracle: filter all vertex subsets by the edge list."""
    out = []
    for k in range(g.n + 1):
        for sub in combinations(range(1, g.n + 1), k):
            if all(not g.has_edge(a, b) for a, b in combinations(sub, 2)):
                out.append(sub)
    return sorted(out, key=lambda w: (len(w), w))


def canon_cycle(cycle):
    """Rotation/reflection canonical form for comparing cycle sets."""
    cyc = list(cycle)
    best = None
    for seq in (cyc, cyc[::-1]):
        for i in range(len(seq)):
            rot = tuple(seq[i:] + seq[:i])
            if best is None or rot < best:
                best = rot
    return best


class TestComplement:
    def test_complete_to_empty(self):
        assert complement(family("complete", 4)).edges == frozenset()

    def test_c5_self_complementary(self):
        c5 = SimpleGraph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
        assert complement(c5).edges == frozenset(
            {(1, 3), (1, 4), (2, 4), (2, 5), (3, 5)})

    def test_path(self):
        p3 = SimpleGraph.from_edges(3, [(1, 2), (2, 3)])
        assert complement(p3).edges == frozenset({(1, 3)})

    def test_involution(self):
        rng = random.Random(0)
        for _ in range(25):
            g = random_graph(rng, rng.randint(1, 8))
            assert complement(complement(g)) == g


class TestStableSets:
    def test_triangle(self):
        fam = stable_sets(family("complete", 3))
        assert fam.sets == ((), (1,), (2,), (3,))

    def test_two_disjoint_edges(self):
        g = SimpleGraph.from_edges(4, [(1, 2), (3, 4)])
        assert stable_sets(g).sets == (
            (), (1,), (2,), (3,), (4,), (1, 3), (1, 4), (2, 3), (2, 4))

    def test_empty_graph(self):
        assert len(stable_sets(SimpleGraph(3, frozenset()))) == 8

    def test_matches_brute_force(self):
        rng = random.Random(1)
        for _ in range(20):
            g = random_graph(rng, rng.randint(1, 8))
            assert list(stable_sets(g).sets) == brute_stable_sets(g)

    def test_canonical_order_and_membership(self):
        g = random_graph(random.Random(5), 7)
        fam = stable_sets(g)
        assert fam.sets[0] == ()
        assert set(fam.sets[1: g.n + 1]) == {(v,) for v in range(1, 8)}
        sizes = [len(w) for w in fam.sets]
        assert sizes == sorted(sizes)


class TestStabilityNumber:
    def test_complete(self):
        for n in (1, 3, 6):
            assert stability_number(family("complete", n)) == 1

    def test_c5(self):
        c5 = SimpleGraph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
        assert stability_number(c5) == max(len(w) for w in brute_stable_sets(c5))
        assert stability_number(c5) == 2

    def test_empty(self):
        assert stability_number(SimpleGraph(6, frozenset())) == 6

    def test_alpha2_iff_triangle_free_complement(self):
        rng = random.Random(2)
        for _ in range(40):
            g = random_graph(rng, rng.randint(2, 7))
            gbar = complement(g)
            tri_free = all(not (gbar.has_edge(a, c))
                           for a, b in gbar.edges for c in range(1, g.n + 1)
                           if gbar.has_edge(b, c) and c not in (a, b))
            expect = gbar.m >= 1 and tri_free
            assert (stability_number(g) == 2) == expect


class TestBipartite:
    def test_c4(self):
        g = SimpleGraph.from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
        assert is_bipartite(g) == (True, None)

    def test_c5_certificate(self):
        g = SimpleGraph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
        ok, cyc = is_bipartite(g)
        assert not ok and len(cyc) % 2 == 1
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            assert g.has_edge(a, b)

    def test_forest(self):
        g = SimpleGraph.from_edges(6, [(1, 2), (2, 3), (4, 5)])
        assert is_bipartite(g)[0]

    def test_matches_networkx(self):
        rng = random.Random(3)
        for _ in range(40):
            g = random_graph(rng, rng.randint(1, 9))
            assert is_bipartite(g)[0] == nx.is_bipartite(to_nx(g))


class TestInducedCycles:
    def test_c7_is_its_own_hole(self):
        c7 = SimpleGraph.from_edges(7, [(i, i + 1) for i in range(1, 7)] + [(1, 7)])
        assert induced_cycles(c7, 4, "odd") == [(1, 2, 3, 4, 5, 6, 7)]

    def test_k4_has_no_holes(self):
        assert induced_cycles(family("complete", 4), 4, "any") == []

    def test_two_pentagons(self):
        g = complement(family("two_odd_holes", 2, 2))
        assert induced_cycles(g, 4, "odd") == [(1, 2, 3, 4, 5), (6, 7, 8, 9, 10)]

    def test_matches_networkx_chordless(self):
        rng = random.Random(4)
        for _ in range(30):
            g = random_graph(rng, rng.randint(3, 8))
            mine = {canon_cycle(c) for c in induced_cycles(g, 3, "any")}
            ref = {canon_cycle(c) for c in nx.chordless_cycles(to_nx(g)) if len(c) >= 3}
            assert mine == ref

    def test_rejects_bad_args(self):
        g = family("complete", 3)
        with pytest.raises(ValueError):
            induced_cycles(g, 2)
        with pytest.raises(ValueError):
            induced_cycles(g, 3, "weird")


class TestPerfect:
    def test_c5_not_perfect(self):
        g = SimpleGraph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
        ok, cert = is_perfect(g)
        assert not ok and cert[0] == "hole" and len(cert[1]) == 5

    def test_bipartite_perfect(self):
        rng = random.Random(6)
        for _ in range(15):
            n = rng.randint(2, 8)
            split = rng.randint(1, n - 1)
            edges = [(i, j) for i in range(1, split + 1)
                     for j in range(split + 1, n + 1) if rng.random() < 0.6]
            g = SimpleGraph.from_edges(n, edges)
            assert is_perfect(g)[0]

    def test_chordal_example(self):
        g = family("kn_minus_edge", 4)
        assert is_perfect(g)[0]

    def test_self_dual(self):
        rng = random.Random(7)
        for _ in range(30):
            g = random_graph(rng, rng.randint(1, 7))
            assert is_perfect(g)[0] == is_perfect(complement(g))[0]


class TestChordal:
    def test_examples(self):
        tree = SimpleGraph.from_edges(5, [(1, 2), (2, 3), (3, 4), (3, 5)])
        c4 = SimpleGraph.from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
        assert is_chordal(tree)
        assert not is_chordal(c4)
        assert is_chordal(family("kn_minus_edge", 4))

    def test_matches_networkx(self):
        rng = random.Random(8)
        for _ in range(40):
            g = random_graph(rng, rng.randint(1, 8))
            assert is_chordal(g) == nx.is_chordal(to_nx(g))


class TestRingGraph:
    def test_trees(self):
        assert is_ring_graph(SimpleGraph.from_edges(5, [(1, 2), (2, 3), (2, 4), (4, 5)]))

    def test_two_triangles_sharing_edge(self):
        g = SimpleGraph.from_edges(4, [(1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
        assert is_ring_graph(g)

    def test_k4(self):
        assert not is_ring_graph(family("complete", 4))

    def test_bowtie_and_wheel(self):
        bowtie = SimpleGraph.from_edges(5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])
        assert is_ring_graph(bowtie)
        wheel = SimpleGraph.from_edges(6, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]
                                       + [(6, i) for i in range(1, 6)])
        assert not is_ring_graph(wheel)

    def test_cycles_and_disjoint_unions(self):
        c6 = SimpleGraph.from_edges(6, [(i, i + 1) for i in range(1, 6)] + [(1, 6)])
        assert is_ring_graph(c6)
        two = SimpleGraph.from_edges(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)])
        assert is_ring_graph(two)


class TestBridges:
    def test_disjoint_pentagons_have_none(self):
        g = complement(family("two_odd_holes", 2, 2))
        c1, c2 = induced_cycles(g, 4, "odd")
        assert bridges_between(g, c1, c2) == []

    def test_single_cross_edge(self):
        g = SimpleGraph.from_edges(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (1, 4)])
        assert bridges_between(g, (1, 2, 3), (4, 5, 6)) == [(1, 4)]

    def test_identical_vertex_sets(self):
        g = family("complete", 4)
        assert bridges_between(g, (1, 2, 3), (1, 3, 2)) == []

    def test_rejects_non_cycles(self):
        g = SimpleGraph.from_edges(4, [(1, 2), (2, 3), (3, 4)])
        with pytest.raises(ValueError):
            bridges_between(g, (1, 2, 3), (2, 3, 4))


class TestOddCycleCondition:
    def test_bipartite_trivially_true(self):
        g = SimpleGraph.from_edges(6, [(1, 4), (2, 5), (3, 6), (1, 5)])
        assert induced_cycles(g, 3, "odd") == []
        assert odd_cycle_condition(g) == (True, None)

    def test_two_pentagons_fail(self):
        g = complement(family("two_odd_holes", 2, 2))
        ok, pair = odd_cycle_condition(g)
        assert not ok
        assert {len(pair[0]), len(pair[1])} == {5}

    def test_cross_edge_restores(self):
        g = complement(family("two_odd_holes", 2, 2))
        g2 = SimpleGraph(10, g.edges | {(1, 6)})
        assert odd_cycle_condition(g2) == (True, None)
        # exhaustive pair check oracle
        cycles = induced_cycles(g2, 3, "odd")
        for a, b in combinations(cycles, 2):
            sa, sb = set(a), set(b)
            joined = bool(sa & sb) or any(
                g2.has_edge(i, j) for i in sa - sb for j in sb - sa)
            assert joined

    def test_includes_triangles(self):
        # two disjoint triangles, no bridges: the condition must fail
        g = SimpleGraph.from_edges(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)])
        ok, pair = odd_cycle_condition(g)
        assert not ok and len(pair[0]) == 3


class TestStarGraph:
    def test_single_edge(self):
        gbar = SimpleGraph.from_edges(2, [(1, 2)])
        star = star_graph(gbar)
        assert star.n == 3
        assert star.edges == frozenset({(1, 2), (1, 3), (2, 3)})
        assert star.loops == frozenset({3})

    def test_empty_complement(self):
        star = star_graph(SimpleGraph(4, frozenset()))
        assert star.edges == frozenset({(1, 5), (2, 5), (3, 5), (4, 5)})
        assert star.loops == frozenset({5})

    def test_c5_becomes_wheel(self):
        c5 = SimpleGraph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
        star = star_graph(c5)
        assert star.n == 6 and len(star.edges) == 10 and star.loops == frozenset({6})


class TestCliqueSum:
    def test_two_triangles_on_edge(self):
        t = family("complete", 3)
        g, relabel = clique_sum(t, t, {1: 1, 2: 2})
        assert g.n == 4
        assert g.edges == frozenset({(1, 2), (1, 3), (2, 3), (1, 4), (2, 4)})

    def test_empty_overlap_is_disjoint_union(self):
        t = family("complete", 3)
        g, _ = clique_sum(t, t, {})
        assert g.n == 6 and g.m == 6
        assert stability_number(g) == 2

    def test_bowtie(self):
        t = family("complete", 3)
        g, _ = clique_sum(t, t, {1: 1})
        assert g.n == 5 and g.m == 6

    def test_rejects_non_clique_overlap(self):
        p3 = SimpleGraph.from_edges(3, [(1, 2), (2, 3)])
        with pytest.raises(ValueError):
            clique_sum(p3, p3, {1: 1, 3: 3})


class TestFamilies:
    def test_two_odd_holes(self):
        g = family("two_odd_holes", 2, 2)
        assert g.n == 10
        gbar = complement(g)
        assert gbar.m == 10
        assert len(induced_cycles(gbar, 4, "odd")) == 2

    def test_complement_of_cycle(self):
        g = family("complement_of_cycle", 6)
        assert complement(g).edges == frozenset(
            {(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)})

    def test_complete(self):
        assert family("complete", 4).m == 6

    def test_invalid_params(self):
        with pytest.raises(ValueError):
            family("two_odd_holes", 0, 2)
        with pytest.raises(ValueError):
            family("complement_of_cycle", 2)
        with pytest.raises(ValueError):
            family("no_such_family", 3)

    def test_two_antiholes_shared(self):
        g = family("two_antiholes", 7, 7, 1)
        assert g.n == 13

    def test_random_alpha2_deterministic(self):
        g1 = family("random_alpha2", 6, seed=11)
        g2 = family("random_alpha2", 6, seed=11)
        assert g1 == g2
        assert stability_number(g1) == 2


class TestInducedSubgraph:
    def test_c5_to_path(self):
        c5 = SimpleGraph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
        sub, relabel = induced_subgraph(c5, {1, 2, 3})
        assert sub.edges == frozenset({(1, 2), (2, 3)})
        assert relabel == {1: 1, 2: 2, 3: 3}

    def test_identity(self):
        g = family("complete", 4)
        assert induced_subgraph(g, range(1, 5))[0] == g

    def test_k4_to_k2(self):
        sub, _ = induced_subgraph(family("complete", 4), {1, 2})
        assert sub == family("complete", 2)


class TestGraphFormat:
    def test_roundtrip_simple(self):
        g = family("two_odd_holes", 2, 3)
        assert parse_graph(format_graph(g)) == g

    def test_roundtrip_loops(self):
        h = LoopGraph.from_parts(4, [(1, 2), (3, 4)], [2])
        assert parse_graph(format_graph(h)) == h

    def test_comments_and_errors(self):
        assert parse_graph("c hello\np 2 1\ne 1 2\n").edges == frozenset({(1, 2)})
        with pytest.raises(GraphFormatError, match="line 2"):
            parse_graph("p 2 1\ne 1\n")
        with pytest.raises(GraphFormatError, match="declares"):
            parse_graph("p 2 2\ne 1 2\n")
        with pytest.raises(GraphFormatError):
            parse_graph("e 1 2\n")


class TestWalk:
    def test_validation(self):
        h = LoopGraph.from_parts(3, [(1, 2), (2, 3)], [3])
        Walk((1, 2, 3, 3)).validate(h)  # ends with the loop step
        with pytest.raises(ValueError):
            Walk((1, 3)).validate(h)

    def test_parity_and_closure(self):
        w = Walk((1, 2, 3, 1))
        assert w.closed and not w.even and w.length == 3
