"""The paper-level results as executable checkers: walk binomials, the
stability-number-two generator construction, the mu formula for bipartite
complements, normality criteria and audits, the no-quadratic-basis
certificate, and the stable-set/edge-polytope ring isomorphism check."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .binomials import Binomial, MonomialOrder, ideal_equal, minimal_generators, toric_ideal
from .graphs import (LoopGraph, SimpleGraph, Walk, adjacency_masks, complement,
                     induced_cycles, induced_subgraph, stability_number, stable_sets,
                     star_graph, clique_sum, _cross_edges)
from .polytopes import IdpVerdict, edge_polytope, idp_check, stable_set_polytope


# ---------------------------------------------------------------------------
# walk binomials


def walk_binomial(w: Walk, h: LoopGraph) -> Binomial:
    """The alternating product binomial of an even closed walk, as a vector
    over the graph's edge/loop variables."""
    w.validate(h)
    if not w.closed:
        raise ValueError("walk is not closed")
    if not w.even:
        raise ValueError("walk has odd length")
    gens = h.generators()
    index = {e: i for i, e in enumerate(gens)}
    u = [0] * len(gens)
    for k, step in enumerate(w.steps()):
        u[index[step]] += 1 if k % 2 == 0 else -1
    return Binomial(tuple(u))


def _simple_cycles(g: SimpleGraph, max_len: int) -> list[tuple[int, ...]]:
    """All cycles (chords allowed) up to max_len, canonical: smallest vertex
    first, second entry smaller than the last."""
    adj = adjacency_masks(g)
    out = []

    def extend(path: list, pmask: int, vbit: int, v: int):
        if len(path) >= max_len:
            return
        last = path[-1]
        for u in range(v + 1, g.n + 1):
            ubit = 1 << (u - 1)
            if not adj[last] & ubit or pmask & ubit:
                continue
            if adj[u] & vbit and path[1] < u and len(path) + 1 >= 3:
                out.append(tuple(path) + (u,))
            path.append(u)
            extend(path, pmask | ubit, vbit, v)
            path.pop()

    for v in range(1, g.n + 1):
        vbit = 1 << (v - 1)
        for a in range(v + 1, g.n + 1):
            if adj[v] & (1 << (a - 1)):
                extend([v, a], vbit | (1 << (a - 1)), vbit, v)
    return out


def _paths_between(g: SimpleGraph, c1: tuple, c2: tuple, max_len: int):
    """Simple paths from a vertex of c1 to a vertex of c2 whose interior avoids
    both cycles."""
    adj = adjacency_masks(g)
    s2 = set(c2)
    blocked = set(c1) | set(c2)
    paths = []

    def extend(path: list, pmask: int):
        if len(path) - 1 >= max_len:
            return
        last = path[-1]
        for u in range(1, g.n + 1):
            ubit = 1 << (u - 1)
            if not adj[last] & ubit or pmask & ubit:
                continue
            if u in s2:
                paths.append(path + [u])
                continue
            if u in blocked:
                continue
            path.append(u)
            extend(path, pmask | ubit)
            path.pop()

    for u in c1:
        extend([u], 1 << (u - 1))
    return paths


def _rotate_to(cycle: tuple, v: int) -> tuple:
    i = cycle.index(v)
    return cycle[i:] + cycle[:i]


def _closed_traversal(cycle: tuple) -> list[int]:
    # a loop (v,) traverses as v -> v
    return list(cycle) + [cycle[0]]


def edge_toric_generators(h: LoopGraph, len_bound: int) -> list[Binomial]:
    """Walk binomials generating the toric ideal of the edge polytope:
    even cycles, pairs of odd cycles (loops count as odd cycles of length 1)
    sharing one vertex, and disjoint odd cycle pairs joined by a path, all of
    total length <= len_bound.  Every even closed walk binomial is generated
    by these."""
    if len_bound % 2:
        raise ValueError("len_bound must be even")
    skeleton = SimpleGraph(h.n, h.edges)
    cycles = _simple_cycles(skeleton, len_bound)
    odd = [c for c in cycles if len(c) % 2 == 1] + [(v,) for v in sorted(h.loops)]
    walks = []
    for c in cycles:
        if len(c) % 2 == 0 and len(c) <= len_bound:
            walks.append(Walk(tuple(_closed_traversal(c))))
    for c1, c2 in combinations(odd, 2):
        shared = set(c1) & set(c2)
        total = len(c1) + len(c2)
        if len(shared) == 1 and total <= len_bound:
            (s,) = shared
            r1, r2 = _rotate_to(c1, s), _rotate_to(c2, s)
            walks.append(Walk(tuple(_closed_traversal(r1) + _closed_traversal(r2)[1:])))
        elif not shared:
            budget = (len_bound - total) // 2
            if budget < 1:
                continue
            for p in _paths_between(skeleton, c1, c2, budget):
                r1 = _rotate_to(c1, p[0])
                r2 = _rotate_to(c2, p[-1])
                seq = _closed_traversal(r1) + p[1:] + _closed_traversal(r2)[1:] + p[-2::-1]
                walks.append(Walk(tuple(seq)))
    seen = set()
    out = []
    for w in walks:
        b = walk_binomial(w, h)
        if b.is_zero:
            continue
        canon = max(b.u, b.flipped().u)
        if canon not in seen:
            seen.add(canon)
            out.append(Binomial(canon))
    out.sort(key=lambda b: (b.degree(), b.u))
    return out


# ---------------------------------------------------------------------------
# stability number two


def _require_alpha2(g: SimpleGraph) -> None:
    a = stability_number(g)
    if a != 2:
        raise ValueError(f"operation requires stability number 2, got {a}")


def alpha2_generators(g: SimpleGraph, len_bound: int | None = None) -> list[Binomial]:
    """Generators of the stable set polytope's toric ideal for alpha(g) = 2:
    the complement's edge-polytope walk binomials lifted to stable-pair
    variables, plus one quadric per path and per edge of the complement."""
    _require_alpha2(g)
    gbar = complement(g)
    if len_bound is None:
        len_bound = 2 * gbar.m
    fam = stable_sets(g)
    index = {w: i for i, w in enumerate(fam.sets)}
    nv = len(fam.sets)

    lifted = []
    gbar_loop = LoopGraph(gbar.n, gbar.edges)
    gbar_gens = gbar_loop.generators()
    for b in edge_toric_generators(gbar_loop, len_bound):
        u = [0] * nv
        for pos, x in enumerate(b.u):
            if x:
                u[index[gbar_gens[pos]]] += x
        lifted.append(Binomial(tuple(u)))

    quads = []
    adj = adjacency_masks(gbar)
    # type (i): paths i - j - k in the complement, i < k
    for j in range(1, gbar.n + 1):
        nb = [u for u in range(1, gbar.n + 1) if adj[j] >> (u - 1) & 1]
        for i, k in combinations(nb, 2):
            u = [0] * nv
            u[index[tuple(sorted((i, j)))]] += 1
            u[index[(k,)]] += 1
            u[index[tuple(sorted((j, k)))]] -= 1
            u[index[(i,)]] -= 1
            quads.append(Binomial(tuple(u)))
    # type (ii): one quadric per edge of the complement
    for i, j in sorted(gbar.edges):
        u = [0] * nv
        u[index[(i, j)]] += 1
        u[index[()]] += 1
        u[index[(i,)]] -= 1
        u[index[(j,)]] -= 1
        quads.append(Binomial(tuple(u)))
    return lifted + quads


def mu_bipartite_complement(g: SimpleGraph) -> int:
    """Largest degree in a minimal generating set when the complement is
    bipartite: 0 for a complete graph, half the longest induced cycle of the
    complement when one exists, 2 otherwise."""
    gbar = complement(g)
    from .graphs import is_bipartite
    ok, _ = is_bipartite(gbar)
    if not ok:
        raise ValueError("complement is not bipartite")
    if gbar.m == 0:
        return 0
    cycles = induced_cycles(gbar, 3, "any")
    if not cycles:
        return 2
    return max(len(c) for c in cycles) // 2


# ---------------------------------------------------------------------------
# normality


def normality_verdict_alpha2(g: SimpleGraph):
    """Exact normality verdict for alpha(g) = 2: normal iff the complement
    satisfies the odd cycle condition.  Returns ('normal', None) or
    ('nonnormal', (c1, c2)) with a violating pair of complement odd cycles."""
    _require_alpha2(g)
    from .graphs import odd_cycle_condition
    ok, pair = odd_cycle_condition(complement(g))
    if ok:
        return "normal", None
    return "nonnormal", pair


@dataclass(frozen=True)
class Violation:
    """A structural certificate in the complement graph implying the stated
    failure (non-normality or non-quadratic generation)."""

    audit: str
    kind: str
    cycles: tuple
    bridges: tuple = ()


def _antiholes_of(gbar: SimpleGraph) -> list[tuple[int, ...]]:
    # an antihole of the complement graph is an induced odd cycle of g itself
    return induced_cycles(complement(gbar), 5, "odd")


def normality_necessary_audit(g: SimpleGraph) -> list[Violation]:
    """Scan the complement for the structures that force a non-normal stable
    set polytope: bridgeless disjoint odd hole pairs, bridgeless disjoint or
    singly-intersecting odd antihole pairs, and bridgeless hole/antihole pairs."""
    gbar = complement(g)
    holes = induced_cycles(gbar, 5, "odd")
    antiholes = _antiholes_of(gbar)
    out = []
    for c1, c2 in combinations(holes, 2):
        s1, s2 = set(c1), set(c2)
        if not s1 & s2 and not _cross_edges(gbar, s1, s2):
            out.append(Violation("normality", "disjoint-odd-holes", (c1, c2)))
    for c1, c2 in combinations(antiholes, 2):
        s1, s2 = set(c1), set(c2)
        shared = s1 & s2
        if not shared and not _cross_edges(gbar, s1, s2):
            out.append(Violation("normality", "disjoint-odd-antiholes", (c1, c2)))
        elif (len(shared) == 1 and len(c1) >= 7 and len(c2) >= 7
              and not _cross_edges(gbar, s1, s2)):
            out.append(Violation("normality", "shared-vertex-antiholes", (c1, c2)))
    for c1 in holes:
        for c2 in antiholes:
            s1, s2 = set(c1), set(c2)
            if not s1 & s2 and not _cross_edges(gbar, s1, s2):
                out.append(Violation("normality", "hole-antihole", (c1, c2)))
    return out


def quadratic_necessary_audit(g: SimpleGraph) -> list[Violation]:
    """Scan the complement for the structures that prevent generation by
    quadrics: chordless even cycles of length >= 6, odd hole pairs with one
    common vertex and no bridge, and disjoint odd hole pairs with fewer than
    two bridges."""
    gbar = complement(g)
    out = []
    for c in induced_cycles(gbar, 6, "even"):
        out.append(Violation("quadratic", "chordless-even-cycle", (c,)))
    holes = induced_cycles(gbar, 5, "odd")
    for c1, c2 in combinations(holes, 2):
        s1, s2 = set(c1), set(c2)
        shared = s1 & s2
        bridges = tuple(_cross_edges(gbar, s1, s2))
        if len(shared) == 1 and not bridges:
            out.append(Violation("quadratic", "shared-vertex-holes-bridgeless", (c1, c2)))
        elif not shared and len(bridges) < 2:
            out.append(Violation("quadratic", "disjoint-holes-few-bridges", (c1, c2), bridges))
    return out


def two_hole_witness(g: SimpleGraph, pair) -> tuple:
    """The lattice point certifying non-normality for a bridgeless disjoint
    pair of complement odd holes: all-ones on the two holes at level k+l+1."""
    c1, c2 = pair
    k, l = len(c1) // 2, len(c2) // 2
    vec = [0] * (g.n + 1)
    for v in c1 + c2:
        vec[v - 1] = 1
    vec[g.n] = k + l + 1
    return tuple(vec)


def no_quadratic_gb_certificate(g: SimpleGraph, dmax: int | None = None):
    """Certify that no monomial order admits a quadratic Groebner basis: the
    configuration is 0/1, so a non-normality witness rules every order out.
    Returns ('certified', witness) or ('not-applicable', None)."""
    if dmax is None:
        dmax = g.n + 1
    if stability_number(g) == 2:
        verdict, pair = normality_verdict_alpha2(g)
        if verdict == "nonnormal":
            witness = two_hole_witness(g, pair)
            from .polytopes import semigroup_membership
            config = stable_set_polytope(g)
            ok, _ = semigroup_membership(witness, config)
            assert not ok, "two-hole witness unexpectedly decomposed"
            return "certified", witness
        return "not-applicable", None
    verdict = idp_check(stable_set_polytope(g), dmax)
    if verdict.status == "nonnormal":
        return "certified", verdict.witness
    return "not-applicable", None


# ---------------------------------------------------------------------------
# the ring isomorphism behind the alpha = 2 theory


def star_variable_bijection(g: SimpleGraph):
    """Map each edge/loop of the complement's star graph to the stable set it
    realizes: the hub loop to the empty set, hub edges to singletons, and
    complement edges to stable pairs."""
    gbar = complement(g)
    star = star_graph(gbar)
    hub = star.n
    fam = stable_sets(g)
    mapping = []
    for i, j in star.generators():
        if i == hub and j == hub:
            label = ()
        elif j == hub:
            label = (i,)
        elif i == hub:
            label = (j,)
        else:
            label = (i, j)
        mapping.append(fam.sets.index(label))
    return star, mapping


def keylemma_check(g: SimpleGraph) -> bool:
    """Verify that the stable-set toric ideal and the star graph's edge-polytope
    toric ideal coincide under the canonical variable bijection."""
    _require_alpha2(g)
    ideal_g = toric_ideal(stable_set_polytope(g))
    star, mapping = star_variable_bijection(g)
    ideal_star = toric_ideal(edge_polytope(star))
    nv = len(stable_sets(g).sets)
    remapped = []
    for b in ideal_star:
        u = [0] * nv
        for pos, x in enumerate(b.u):
            u[mapping[pos]] += x
        remapped.append(Binomial(tuple(u)))
    return ideal_equal(ideal_g, remapped)


# ---------------------------------------------------------------------------
# clique sums


@dataclass(frozen=True)
class CliqueSumReport:
    part1: object
    part2: object
    total: object
    consistent: bool
    hard_failure: bool


def _budgeted_verdict(g: SimpleGraph, dmax: int):
    """Exact verdict via the odd-cycle criterion when alpha = 2, else the
    budgeted lattice-point oracle."""
    if g.n == 0:
        return "normal", None
    if stability_number(g) == 2:
        verdict, pair = normality_verdict_alpha2(g)
        return verdict, pair
    v = idp_check(stable_set_polytope(g), dmax)
    if v.status == "nonnormal":
        return "nonnormal", v.witness
    return f"normal-up-to-{dmax}", None


def clique_sum_normality_check(g1: SimpleGraph, g2: SimpleGraph,
                               identification: dict, dmax: int) -> CliqueSumReport:
    """Check, within budget, that the clique sum is normal exactly when both
    parts are.  A confirmed counterexample within budget is a hard failure."""
    total_graph, _ = clique_sum(g1, g2, identification)
    v1 = _budgeted_verdict(g1, dmax)
    v2 = _budgeted_verdict(g2, dmax)
    vt = _budgeted_verdict(total_graph, dmax)
    parts_nonnormal = v1[0] == "nonnormal" or v2[0] == "nonnormal"
    total_nonnormal = vt[0] == "nonnormal"
    parts_exact = all(v[0] in ("normal", "nonnormal") for v in (v1, v2))
    hard = False
    if total_nonnormal and parts_exact and not parts_nonnormal:
        hard = True  # sum broke while both parts are provably normal
    if parts_nonnormal and not total_nonnormal and vt[0].startswith("normal"):
        # a part witness lifts to a face of the sum, so the oracle must see it
        hard = True
    consistent = not hard and (total_nonnormal == parts_nonnormal or not parts_exact)
    return CliqueSumReport(v1, v2, vt, consistent, hard)
