"""Named verification suites: exhaustive or sampled cross-validation of the
graph-side criteria against the algebra-side oracles.  Each suite returns a
SuiteResult with one verdict line per instance; any failure flips ``passed``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .binomials import ideal_equal, minimal_generators, toric_ideal
from .enumeration import (all_labeled_graphs, is_connected, is_triangle_free,
                          labeled_triangle_free_graphs, unlabeled_graphs,
                          vertex_orbit_representatives)
from .graphs import (LoopGraph, SimpleGraph, complement, family, induced_cycles,
                     is_bipartite, stability_number)
from .polytopes import (cone_membership, edge_polytope, idp_check, is_unimodular,
                        proof_witness, semigroup_membership, stable_set_polytope)
from .theorems import (alpha2_generators, clique_sum_normality_check, keylemma_check,
                       mu_bipartite_complement, normality_verdict_alpha2)


@dataclass
class SuiteResult:
    suite: str
    passed: bool = True
    instances: int = 0
    lines: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    def record(self, ok: bool, line: str) -> None:
        self.instances += 1
        tag = "ok" if ok else "FAIL"
        self.lines.append(f"{tag:4s} {line}")
        if not ok:
            self.passed = False
            self.failures.append(line)

    def summary(self) -> str:
        state = "PASS" if self.passed else "FAIL"
        return f"suite {self.suite}: {state} ({self.instances} instances, {len(self.failures)} failures)"


def suite_unimodularity(n: int = 5, guard: int = 10_000_000) -> SuiteResult:
    """Over every labeled graph on n vertices: unimodular(Q_G) iff the
    complement is bipartite."""
    res = SuiteResult("unimodularity")
    for g in all_labeled_graphs(n):
        bip, _ = is_bipartite(complement(g))
        uni = is_unimodular(stable_set_polytope(g), guard=guard)
        ok = (uni.status == "unimodular") == bip
        res.record(ok, f"edges={sorted(g.edges)} bipartite_complement={bip} minors={uni.status}")
    return res


def suite_mu(cycles=(4, 6, 8)) -> SuiteResult:
    """The closed formula for bipartite complements against elimination ideals."""
    res = SuiteResult("mu")
    for m in cycles:
        g = family("complement_of_cycle", m)
        expect = m // 2
        formula = mu_bipartite_complement(g)
        _, mu = minimal_generators(toric_ideal(stable_set_polytope(g)))
        res.record(mu == expect == formula, f"complement C_{m}: mu={mu} expected={expect}")
    trees = [
        SimpleGraph.from_edges(2, [(1, 2)]),
        SimpleGraph.from_edges(4, [(1, 2), (2, 3), (3, 4)]),
        SimpleGraph.from_edges(5, [(1, 2), (1, 3), (1, 4), (1, 5)]),
    ]
    for t in trees:
        g = complement(t)
        formula = mu_bipartite_complement(g)
        _, mu = minimal_generators(toric_ideal(stable_set_polytope(g)))
        res.record(mu == 2 == formula, f"complement tree n={t.n} m={t.m}: mu={mu} expected=2")
    g = family("complete", 5)
    _, mu = minimal_generators(toric_ideal(stable_set_polytope(g)))
    res.record(mu == 0 == mu_bipartite_complement(g), f"K5: mu={mu} expected=0")
    return res


def alpha2_labeled_graphs(max_n: int):
    """Every labeled graph with stability number exactly 2 on <= max_n vertices
    (triangle-free complement with at least one edge)."""
    for n in range(2, max_n + 1):
        for gbar in labeled_triangle_free_graphs(n):
            if gbar.m >= 1:
                yield complement(gbar)


def alpha2_class_representatives(max_n: int):
    """One representative per isomorphism class of stability-number-2 graphs."""
    for n in range(2, max_n + 1):
        for gbar in unlabeled_graphs(n, triangle_free=True):
            if gbar.m >= 1:
                yield complement(gbar)


def suite_generators(max_n: int = 6) -> SuiteResult:
    """Theorem check: the walk/quadric construction generates the toric ideal,
    and mu(Q_G) = max(mu(P_complement), 2), for every labeled alpha=2 graph."""
    res = SuiteResult("generators")
    for g in alpha2_labeled_graphs(max_n):
        gbar = complement(g)
        gens_elim = toric_ideal(stable_set_polytope(g))
        gens_a2 = alpha2_generators(g, 2 * gbar.m)
        eq = ideal_equal(gens_a2, gens_elim)
        _, mu_q = minimal_generators(gens_elim)
        edge_ideal = toric_ideal(edge_polytope(LoopGraph(gbar.n, gbar.edges)))
        _, mu_p = minimal_generators(edge_ideal)
        ok = eq and mu_q == max(mu_p, 2)
        res.record(ok, f"n={g.n} complement_edges={sorted(gbar.edges)} "
                       f"ideal_equal={eq} mu_q={mu_q} mu_p={mu_p}")
    return res


def suite_normality(max_n: int = 7, dmax: int = 8) -> SuiteResult:
    """Theorem check: the odd-cycle-condition verdict agrees with the budgeted
    lattice-point oracle on alpha=2 isomorphism classes."""
    res = SuiteResult("normality")
    for g in alpha2_class_representatives(max_n):
        verdict, _ = normality_verdict_alpha2(g)
        oracle = idp_check(stable_set_polytope(g), dmax)
        ok = (verdict == "normal") == (oracle.status == "normal-up-to")
        res.record(ok, f"n={g.n} complement_edges={sorted(complement(g).edges)} "
                       f"theorem={verdict} oracle={oracle.status}")
    return res


def suite_keylemma(max_n: int = 5, cycles=(4, 5, 6)) -> SuiteResult:
    """Ring isomorphism check on small alpha=2 classes and cycle complements."""
    res = SuiteResult("keylemma")
    for g in alpha2_class_representatives(max_n):
        ok = keylemma_check(g)
        res.record(ok, f"n={g.n} complement_edges={sorted(complement(g).edges)}")
    for m in cycles:
        g = family("complement_of_cycle", m)
        res.record(keylemma_check(g), f"complement C_{m}")
    return res


def suite_witnesses() -> SuiteResult:
    """The three explicit proof witnesses: certificate reproduces the vector,
    the exact LP confirms cone membership, the exhaustive search refutes
    semigroup membership."""
    res = SuiteResult("witnesses")
    cases = [
        ("two-antiholes", family("two_antiholes", 7, 7, 0),
         (tuple(range(1, 8)), tuple(range(8, 15)))),
        ("shared-vertex-antiholes", family("two_antiholes", 7, 7, 1),
         (tuple(range(1, 8)), tuple(range(7, 14)))),
        ("hole-antihole", family("hole_antihole", 5, 7),
         (tuple(range(1, 6)), tuple(range(6, 13)))),
    ]
    for kind, g, cyc in cases:
        alpha, cert = proof_witness(kind, g, cyc)
        config = stable_set_polytope(g)
        cert_ok = cert.check(config, alpha)
        in_cone, _ = cone_membership(alpha, config)
        in_semigroup, _ = semigroup_membership(alpha, config)
        ok = cert_ok and in_cone and not in_semigroup
        res.record(ok, f"{kind}: certificate={cert_ok} cone={in_cone} semigroup={in_semigroup}")
    return res


def suite_cliquesum(pairs: int = 20, seed: int = 0, dmax: int = 6) -> SuiteResult:
    """Random alpha=2 parts glued on a vertex or an edge: the budgeted
    equivalence 'sum normal iff both parts normal' must hold."""
    res = SuiteResult("cliquesum")
    rng = random.Random(seed)
    made = 0
    while made < pairs:
        n1, n2 = rng.randint(3, 5), rng.randint(3, 5)
        g1 = family("random_alpha2", n1, seed=rng.randrange(1 << 30), p=0.5)
        g2 = family("random_alpha2", n2, seed=rng.randrange(1 << 30), p=0.5)
        glue_edge = rng.random() < 0.5
        ident = None
        if glue_edge:
            e1s, e2s = sorted(g1.edges), sorted(g2.edges)
            if e1s and e2s:
                e1 = e1s[rng.randrange(len(e1s))]
                e2 = e2s[rng.randrange(len(e2s))]
                ident = {e2[0]: e1[0], e2[1]: e1[1]}
        if ident is None:
            ident = {rng.randint(1, g2.n): rng.randint(1, g1.n)}
        made += 1
        report = clique_sum_normality_check(g1, g2, ident, dmax)
        ok = report.consistent and not report.hard_failure
        res.record(ok, f"n1={n1} n2={n2} glue={sorted(ident.items())} "
                       f"parts=({report.part1[0]},{report.part2[0]}) sum={report.total[0]}")
    return res


def connected_loop_graphs(max_n: int):
    """Connected loop graphs on <= max_n vertices with at most one loop, up to
    isomorphism (the loop placed once per vertex orbit)."""
    for n in range(1, max_n + 1):
        for g in unlabeled_graphs(n):
            if not is_connected(g):
                continue
            yield LoopGraph(g.n, g.edges)
            for v in vertex_orbit_representatives(g):
                yield LoopGraph(g.n, g.edges, frozenset({v}))


def _zero_ideal_predicted(h: LoopGraph) -> bool:
    """Graph-side criterion: at most one cycle per (connected) graph and that
    cycle odd, a loop counting as an odd cycle of length 1."""
    cyclomatic = h.m + len(h.loops) - h.n + 1
    if cyclomatic <= 0:
        return True
    if cyclomatic > 1:
        return False
    if h.loops:
        return True  # the unique cycle is the loop
    skeleton = SimpleGraph(h.n, h.edges)
    cycle = induced_cycles(skeleton, 3, "any")[0]
    return len(cycle) % 2 == 1


def suite_walks(max_n: int = 6) -> SuiteResult:
    """Zero-ideal criterion for edge polytopes of connected loop graphs."""
    res = SuiteResult("walks")
    for h in connected_loop_graphs(max_n):
        predicted = _zero_ideal_predicted(h)
        actual = not toric_ideal(edge_polytope(h))
        res.record(predicted == actual,
                   f"n={h.n} edges={sorted(h.edges)} loops={sorted(h.loops)} "
                   f"predicted_zero={predicted} actual_zero={actual}")
    return res


SUITES = {
    "unimodularity": suite_unimodularity,
    "generators": suite_generators,
    "normality": suite_normality,
    "mu": suite_mu,
    "keylemma": suite_keylemma,
    "witnesses": suite_witnesses,
    "cliquesum": suite_cliquesum,
    "walks": suite_walks,
}


def run_suite(name: str, **kwargs) -> SuiteResult:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](**kwargs)
