"""Point configurations, unimodularity, memberships, the normality oracle,
and the explicit proof witnesses."""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from stabletoric.enumeration import all_labeled_graphs
from stabletoric.graphs import LoopGraph, SimpleGraph, complement, family, induced_subgraph, \
    star_graph
from stabletoric.polytopes import (PointConfiguration, RationalCertificate,
                                   cone_membership, edge_polytope, face_restriction,
                                   format_witness, idp_check, is_unimodular,
                                   parse_witness, proof_witness, semigroup_membership,
                                   stable_set_polytope)
from stabletoric.graphs import is_bipartite


class TestConfigurations:
    def test_simplex_for_complete(self):
        cfg = stable_set_polytope(family("complete", 3))
        assert cfg.points == ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1))

    def test_two_disjoint_edges(self):
        g = SimpleGraph.from_edges(4, [(1, 2), (3, 4)])
        cfg = stable_set_polytope(g)
        assert len(cfg) == 9
        assert (1, 0, 1, 0) in cfg.points  # e1 + e3

    def test_unit_square(self):
        cfg = stable_set_polytope(SimpleGraph(2, frozenset()))
        assert set(cfg.points) == {(0, 0), (1, 0), (0, 1), (1, 1)}

    def test_edge_polytope_triangle(self):
        h = LoopGraph.from_parts(3, [(1, 2), (2, 3), (1, 3)])
        assert set(edge_polytope(h).points) == {(1, 1, 0), (0, 1, 1), (1, 0, 1)}

    def test_edge_polytope_single_loop(self):
        h = LoopGraph.from_parts(1, [], [1])
        assert edge_polytope(h).points == ((2,),)

    def test_edge_polytope_of_star_graph(self):
        star = star_graph(SimpleGraph.from_edges(2, [(1, 2)]))
        cfg = edge_polytope(star)
        assert set(cfg.points) == {(1, 1, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)}

    def test_rejects_negative_coordinates(self):
        with pytest.raises(ValueError):
            PointConfiguration(2, ((0, -1),), ("a",))


class TestUnimodularity:
    def test_bipartite_complement_cases(self):
        assert bool(is_unimodular(stable_set_polytope(family("complement_of_cycle", 4))))
        assert bool(is_unimodular(stable_set_polytope(family("complete", 4))))

    def test_c5_complement_refuted_with_minor_two(self):
        res = is_unimodular(stable_set_polytope(family("complement_of_cycle", 5)))
        assert res.status == "not-unimodular"
        assert res.refuting_value == 2 and res.reference_value == 1

    def test_exhaustive_equivalence_n4(self):
        for g in all_labeled_graphs(4):
            bip, _ = is_bipartite(complement(g))
            assert bool(is_unimodular(stable_set_polytope(g))) == bip

    def test_rank_deficient_rejected(self):
        h = LoopGraph.from_parts(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
        with pytest.raises(ValueError, match="rank"):
            is_unimodular(edge_polytope(h))

    def test_infeasible_guard(self):
        # bipartite complement: no odd-cycle refutation exists, so a tiny
        # guard must surface infeasibility instead of guessing
        res = is_unimodular(stable_set_polytope(family("complement_of_cycle", 4)), guard=5)
        assert res.status == "infeasible"
        with pytest.raises(ValueError):
            bool(res)


class TestMemberships:
    def test_generator_point_in_cone(self):
        cfg = stable_set_polytope(family("complete", 3))
        target = cfg.hpoints()[2]
        ok, cert = cone_membership(target, cfg)
        assert ok and cert.check(cfg, target)

    def test_flagship_cone_combination(self):
        g = family("two_odd_holes", 2, 2)
        cfg = stable_set_polytope(g)
        target = tuple([1] * 10 + [5])
        ok, cert = cone_membership(target, cfg)
        assert ok and cert.check(cfg, target)
        # the half-weights on the ten stable pairs of the two holes reproduce it
        gbar = complement(g)
        entries = tuple((cfg.index_of_label(e), Fraction(1, 2)) for e in sorted(gbar.edges))
        assert RationalCertificate(entries).check(cfg, target)

    def test_negative_level_infeasible(self):
        cfg = stable_set_polytope(family("complete", 3))
        assert cone_membership((0, 0, 0, -1), cfg) == (False, None)

    def test_semigroup_doubled_point(self):
        cfg = stable_set_polytope(family("kn_minus_edge", 4))
        pt = cfg.hpoints()[5]
        target = tuple(2 * x for x in pt)
        ok, decomp = semigroup_membership(target, cfg)
        assert ok and list(decomp) == [5, 5]

    def test_semigroup_flagship_failure(self):
        cfg = stable_set_polytope(family("two_odd_holes", 2, 2))
        ok, _ = semigroup_membership(tuple([1] * 10 + [5]), cfg)
        assert not ok

    def test_semigroup_pair_sum(self):
        g = SimpleGraph.from_edges(4, [(1, 2), (3, 4)])
        cfg = stable_set_polytope(g)
        w1 = cfg.index_of_label((1, 3))
        w2 = cfg.index_of_label((2, 4))
        target = tuple(a + b for a, b in zip(cfg.hpoints()[w1], cfg.hpoints()[w2]))
        ok, decomp = semigroup_membership(target, cfg)
        assert ok and sorted(decomp) == sorted([w1, w2])


class TestIdp:
    def test_perfect_graph_normal(self):
        verdict = idp_check(stable_set_polytope(family("complement_of_cycle", 4)), 4)
        assert verdict.status == "normal-up-to" and verdict.dmax == 4

    def test_flagship_witness(self):
        cfg = stable_set_polytope(family("two_odd_holes", 2, 2))
        verdict = idp_check(cfg, 5)
        assert verdict.status == "nonnormal"
        assert verdict.witness == tuple([1] * 10 + [5])
        assert verdict.witness_level == 5

    def test_simplex_always_normal(self):
        verdict = idp_check(stable_set_polytope(family("complete", 4)), 6)
        assert verdict.status == "normal-up-to"

    def test_monotone_same_witness(self):
        cfg = stable_set_polytope(family("two_odd_holes", 2, 2))
        w5 = idp_check(cfg, 5).witness
        w6 = idp_check(cfg, 6).witness
        assert w5 == w6

    def test_rejects_small_budget(self):
        with pytest.raises(ValueError):
            idp_check(stable_set_polytope(family("complete", 3)), 1)

    def test_face_witness_inherited_by_parent(self):
        # the two-odd-holes structure embedded in a larger graph still fails
        core = complement(family("two_odd_holes", 2, 2))
        big_bar = SimpleGraph(11, core.edges)  # isolated complement vertex 11
        big = complement(big_bar)
        verdict = idp_check(stable_set_polytope(big), 5)
        assert verdict.status == "nonnormal"


class TestProofWitnesses:
    def test_two_antiholes(self):
        g = family("two_antiholes", 7, 7, 0)
        alpha, cert = proof_witness("two-antiholes", g,
                                    (tuple(range(1, 8)), tuple(range(8, 15))))
        cfg = stable_set_polytope(g)
        assert all(isinstance(x, int) for x in alpha)
        assert cert.check(cfg, alpha)
        assert cone_membership(alpha, cfg)[0]
        assert not semigroup_membership(alpha, cfg)[0]
        assert alpha[-1] == 5

    def test_two_antiholes_k2_leftover_vanishes(self):
        g = family("two_antiholes", 5, 5, 0)
        alpha, cert = proof_witness("two-antiholes", g,
                                    (tuple(range(1, 6)), tuple(range(6, 11))))
        # k = l = 2: the origin coefficient (kl-k-l)/kl collapses to zero
        cfg = stable_set_polytope(g)
        assert cert.check(cfg, alpha)
        assert all(idx != cfg.index_of_label(()) for idx, _ in cert.entries)

    def test_shared_vertex(self):
        g = family("two_antiholes", 7, 7, 1)
        alpha, cert = proof_witness("shared-vertex-antiholes", g,
                                    (tuple(range(1, 8)), tuple(range(7, 14))))
        cfg = stable_set_polytope(g)
        assert alpha[6] == 3  # the shared vertex carries coefficient 3
        assert cert.check(cfg, alpha)
        assert not semigroup_membership(alpha, cfg)[0]

    def test_hole_antihole(self):
        g = family("hole_antihole", 5, 7)
        alpha, cert = proof_witness("hole-antihole", g,
                                    (tuple(range(1, 6)), tuple(range(6, 13))))
        cfg = stable_set_polytope(g)
        assert alpha[-1] == 2 + 3  # k + 3 with k = 2
        assert cert.check(cfg, alpha)
        assert not semigroup_membership(alpha, cfg)[0]

    def test_preconditions(self):
        g = family("two_antiholes", 5, 5, 1)
        with pytest.raises(ValueError, match="k, l >= 3"):
            proof_witness("shared-vertex-antiholes", g,
                          (tuple(range(1, 6)), tuple(range(5, 10))))
        g = family("two_odd_holes", 2, 2)
        with pytest.raises(ValueError):
            proof_witness("two-antiholes", g, ((1, 2, 3, 4, 5), (6, 7, 8, 9, 10)))

    def test_bridge_rejected(self):
        base = family("two_antiholes", 7, 7, 0)
        bridged = SimpleGraph(base.n, frozenset(set(base.edges) - {(1, 8)}))
        with pytest.raises(ValueError, match="bridge"):
            proof_witness("two-antiholes", bridged,
                          (tuple(range(1, 8)), tuple(range(8, 15))))


class TestFaceRestriction:
    def test_simplex_face(self):
        cfg = stable_set_polytope(family("complete", 3))
        face = face_restriction(cfg, {3})
        expect = stable_set_polytope(family("complete", 2))
        assert face.points == expect.points and face.labels == expect.labels

    def test_empty_zero_set_is_identity(self):
        cfg = stable_set_polytope(family("kn_minus_edge", 4))
        face = face_restriction(cfg, set())
        assert face.points == cfg.points

    def test_matches_induced_subgraph(self):
        g = family("two_odd_holes", 2, 2)
        cfg = stable_set_polytope(g)
        face = face_restriction(cfg, range(6, 11))
        sub, _ = induced_subgraph(g, range(1, 6))
        direct = stable_set_polytope(sub)
        assert face.points == direct.points and face.labels == direct.labels

    def test_random_agreement(self):
        rng = random.Random(31)
        for _ in range(10):
            n = rng.randint(2, 6)
            edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < 0.5]
            g = SimpleGraph.from_edges(n, edges)
            keep = sorted(v for v in range(1, n + 1) if rng.random() < 0.6)
            if not keep:
                continue
            face = face_restriction(stable_set_polytope(g),
                                    set(range(1, n + 1)) - set(keep))
            direct = stable_set_polytope(induced_subgraph(g, keep)[0])
            assert sorted(face.points) == sorted(direct.points)


class TestWitnessFormat:
    def test_roundtrip(self):
        g = family("hole_antihole", 5, 7)
        alpha, cert = proof_witness("hole-antihole", g,
                                    (tuple(range(1, 6)), tuple(range(6, 13))))
        text = format_witness(alpha, cert)
        assert text.startswith("w 5 ")
        alpha2, cert2 = parse_witness(text)
        assert alpha2 == alpha and cert2.entries == cert.entries

    def test_plain_point(self):
        text = format_witness((1, 0, 2, 3))
        assert text == "w 3 1 0 2\n"
        assert parse_witness(text) == ((1, 0, 2, 3), None)
