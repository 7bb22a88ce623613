"""Simple and loop graphs, stable sets, holes, bridges, and named families.

Vertices are labeled 1..n in all inputs and outputs.  Graph values are
immutable; every function here is pure, so results may be cached and calls
may run concurrently.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations


class GraphFormatError(ValueError):
    """Raised when a graph text file cannot be parsed; message carries the line number."""


def _norm_edge(i: int, j: int) -> tuple[int, int]:
    if i == j:
        raise ValueError(f"edge {{{i},{j}}} is a loop")
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected loopless graph on the vertex set {1, ..., n}."""

    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for e in self.edges:
            if not (isinstance(e, tuple) and len(e) == 2 and e[0] < e[1]):
                raise ValueError(f"malformed edge {e!r}; expected sorted pair")
            if not (1 <= e[0] and e[1] <= self.n):
                raise ValueError(f"edge {e} out of range 1..{self.n}")

    @staticmethod
    def from_edges(n: int, edges) -> "SimpleGraph":
        return SimpleGraph(n, frozenset(_norm_edge(i, j) for i, j in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return i != j and _norm_edge(i, j) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(u for u in range(1, self.n + 1) if self.has_edge(u, v)))

    def degree(self, v: int) -> int:
        return bin(adjacency_masks(self)[v]).count("1")


@dataclass(frozen=True)
class LoopGraph:
    """Undirected graph with at most one loop per vertex and no multiple edges."""

    n: int
    edges: frozenset
    loops: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        SimpleGraph(self.n, self.edges)  # reuse edge validation
        for v in self.loops:
            if not 1 <= v <= self.n:
                raise ValueError(f"loop at {v} out of range 1..{self.n}")

    @staticmethod
    def from_parts(n: int, edges, loops=()) -> "LoopGraph":
        return LoopGraph(n, frozenset(_norm_edge(i, j) for i, j in edges), frozenset(loops))

    @property
    def m(self) -> int:
        return len(self.edges)

    def generators(self) -> list[tuple[int, int]]:
        """Canonical order of edge/loop variables: sorted edges, then loops as (v, v)."""
        return sorted(self.edges) + [(v, v) for v in sorted(self.loops)]

    def has_generator(self, i: int, j: int) -> bool:
        if i == j:
            return i in self.loops
        return _norm_edge(i, j) in self.edges


@dataclass(frozen=True)
class Walk:
    """A walk given by its vertex sequence v_1, ..., v_{q+1}; step k is the pair
    {v_k, v_{k+1}}, and a repeated vertex (v, v) is a loop step of length 1."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def closed(self) -> bool:
        return self.length >= 1 and self.vertices[0] == self.vertices[-1]

    @property
    def even(self) -> bool:
        return self.length % 2 == 0

    def steps(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(min(a, b), max(a, b)) for a, b in zip(vs, vs[1:])]

    def validate(self, h) -> None:
        if self.length < 1:
            raise ValueError("walk must have at least one step")
        for a, b in zip(self.vertices, self.vertices[1:]):
            ok = h.has_generator(a, b) if isinstance(h, LoopGraph) else (a != b and h.has_edge(a, b))
            if not ok:
                raise ValueError(f"walk step {{{a},{b}}} is not an edge/loop of the graph")


@dataclass(frozen=True)
class StableSetFamily:
    """All stable sets of a graph, in the canonical order: by cardinality, then
    lexicographically by sorted vertex list.  Contains the empty set and all
    singletons."""

    graph: SimpleGraph
    sets: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def index(self, w) -> int:
        return self.sets.index(tuple(sorted(w)))


@lru_cache(maxsize=65536)
def adjacency_masks(g) -> tuple[int, ...]:
    """Bitmask adjacency rows, index 0 unused; bit (v-1) set in row u iff {u,v} is an edge."""
    masks = [0] * (g.n + 1)
    for i, j in g.edges:
        masks[i] |= 1 << (j - 1)
        masks[j] |= 1 << (i - 1)
    return tuple(masks)


# ---------------------------------------------------------------------------
# basic operations


def complement(g: SimpleGraph) -> SimpleGraph:
    """Complement graph on the same vertex set."""
    non_edges = [(i, j) for i, j in combinations(range(1, g.n + 1), 2)
                 if (i, j) not in g.edges]
    return SimpleGraph(g.n, frozenset(non_edges))


def _stable_masks(g: SimpleGraph) -> list[int]:
    adj = adjacency_masks(g)
    out = []

    def rec(v: int, cur: int, banned: int):
        if v > g.n:
            out.append(cur)
            return
        rec(v + 1, cur, banned)
        b = 1 << (v - 1)
        if not banned & b:
            rec(v + 1, cur | b, banned | adj[v])

    rec(1, 0, 0)
    return out


def _mask_to_set(mask: int) -> tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def stable_sets(g: SimpleGraph) -> StableSetFamily:
    """Every stable (independent) vertex set of g, in canonical order."""
    sets = sorted((_mask_to_set(m) for m in _stable_masks(g)), key=lambda w: (len(w), w))
    return StableSetFamily(g, tuple(sets))


def stability_number(g: SimpleGraph) -> int:
    """alpha(g): size of the largest stable set."""
    return max(bin(m).count("1") for m in _stable_masks(g))


def is_bipartite(g: SimpleGraph):
    """(True, None) if 2-colorable, else (False, odd_cycle) with the cycle as a
    vertex tuple certificate."""
    adj = adjacency_masks(g)
    color = [None] * (g.n + 1)
    parent = [0] * (g.n + 1)
    for root in range(1, g.n + 1):
        if color[root] is not None:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            u = queue.pop()
            nb = adj[u]
            v = 1
            while nb:
                if nb & 1:
                    if color[v] is None:
                        color[v] = 1 - color[u]
                        parent[v] = u
                        queue.append(v)
                    elif color[v] == color[u]:
                        return False, _odd_cycle_from_conflict(u, v, parent)
                nb >>= 1
                v += 1
    return True, None


def _odd_cycle_from_conflict(u: int, v: int, parent: list) -> tuple[int, ...]:
    pu, pv = [u], [v]
    seen = {u: 0}
    x = u
    while parent[x]:
        x = parent[x]
        seen[x] = len(pu)
        pu.append(x)
    x = v
    while x not in seen:
        x = parent[x]
        pv.append(x)
    cycle = pu[: seen[x]] + pv[::-1]
    return tuple(cycle)


def induced_cycles(g: SimpleGraph, min_len: int = 3, parity: str = "any") -> list[tuple[int, ...]]:
    """All chordless cycles of length >= min_len with the given parity, each
    reported once: the tuple starts at its smallest vertex and the second
    entry is smaller than the last (rotation/reflection canonical form)."""
    if min_len < 3:
        raise ValueError("min_len must be >= 3")
    if parity not in ("odd", "even", "any"):
        raise ValueError("parity must be odd, even, or any")
    adj = adjacency_masks(g)
    out = []

    def keep(length: int) -> bool:
        if length < min_len:
            return False
        if parity == "odd":
            return length % 2 == 1
        if parity == "even":
            return length % 2 == 0
        return True

    for v in range(1, g.n + 1):
        vbit = 1 << (v - 1)
        higher = ~((1 << v) - 1)  # vertices > v

        def extend(path: list, pmask: int):
            last = path[-1]
            cand = adj[last] & higher
            u = v + 1
            cm = cand >> v
            while cm:
                if cm & 1 and not pmask & (1 << (u - 1)):
                    au = adj[u]
                    if au & vbit:
                        # closing edge; chordless iff u sees only the path ends
                        if au & pmask == (1 << (last - 1)) | vbit and path[1] < u and keep(len(path) + 1):
                            out.append(tuple(path) + (u,))
                    elif au & pmask == 1 << (last - 1):
                        path.append(u)
                        extend(path, pmask | (1 << (u - 1)))
                        path.pop()
                cm >>= 1
                u += 1

        for a in range(v + 1, g.n + 1):
            if adj[v] & (1 << (a - 1)):
                extend([v, a], vbit | (1 << (a - 1)))
    return sorted(out, key=lambda c: (len(c), c))


def is_perfect(g: SimpleGraph):
    """Strong-perfect-graph test: (True, None) iff neither g nor its complement
    has an odd chordless cycle of length >= 5; otherwise the certificate is
    ('hole'|'antihole', cycle)."""
    holes = induced_cycles(g, 5, "odd")
    if holes:
        return False, ("hole", holes[0])
    antiholes = induced_cycles(complement(g), 5, "odd")
    if antiholes:
        return False, ("antihole", antiholes[0])
    return True, None


def is_chordal(g: SimpleGraph) -> bool:
    """True iff g has no chordless cycle of length >= 4."""
    return not induced_cycles(g, 4, "any")


def _components(n: int, adj, inside: int) -> list[int]:
    """Connected components of the subgraph induced on the bitmask ``inside``."""
    comps = []
    todo = inside
    while todo:
        start = todo & -todo
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            f = frontier
            v = 1
            while f:
                if f & 1:
                    nxt |= adj[v] & inside
                f >>= 1
                v += 1
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        todo &= ~comp
    return comps


def _is_cycle_graph(g: SimpleGraph) -> bool:
    if g.n < 3 or g.m != g.n:
        return False
    adj = adjacency_masks(g)
    if any(bin(adj[v]).count("1") != 2 for v in range(1, g.n + 1)):
        return False
    return len(_components(g.n, adj, (1 << g.n) - 1)) == 1


def is_ring_graph(g: SimpleGraph) -> bool:
    """True iff g decomposes by clique separators of size <= 2 into atoms that
    are single vertices, single edges, or chordless cycles."""
    adj = adjacency_masks(g)
    full = (1 << g.n) - 1

    def solve(inside: int) -> bool:
        verts = _mask_to_set(inside)
        k = len(verts)
        if k == 1:
            return True
        sub_edges = [(i, j) for i, j in combinations(verts, 2) if (i, j) in g.edges]
        if k == 2:
            return len(sub_edges) == 1
        comps = _components(g.n, adj, inside)
        if len(comps) > 1:
            return all(solve(c) for c in comps)
        # single vertex separators, then clique (edge) separators of size 2
        for v in verts:
            rest = inside & ~(1 << (v - 1))
            parts = _components(g.n, adj, rest)
            if len(parts) > 1:
                return all(solve(p | (1 << (v - 1))) for p in parts)
        for i, j in sub_edges:
            sep = (1 << (i - 1)) | (1 << (j - 1))
            rest = inside & ~sep
            if not rest:
                continue
            parts = _components(g.n, adj, rest)
            if len(parts) > 1:
                return all(solve(p | sep) for p in parts)
        sub = induced_subgraph(g, verts)[0]
        return _is_cycle_graph(sub) or (sub.n == 1) or (sub.n == 2 and sub.m == 1)

    if g.n == 0:
        return True
    return solve(full)


def _check_cycle_of(g: SimpleGraph, cycle) -> tuple[int, ...]:
    c = tuple(cycle)
    if len(c) < 3 or len(set(c)) != len(c):
        raise ValueError(f"{c} is not a cycle: needs >= 3 distinct vertices")
    for a, b in zip(c, c[1:] + c[:1]):
        if not g.has_edge(a, b):
            raise ValueError(f"{c} is not a cycle of the graph: missing edge {{{a},{b}}}")
    return c


def _cross_edges(g: SimpleGraph, s1: set, s2: set) -> list[tuple[int, int]]:
    only1, only2 = s1 - s2, s2 - s1
    return sorted(e for e in g.edges
                  if (e[0] in only1 and e[1] in only2) or (e[0] in only2 and e[1] in only1))


def bridges_between(g: SimpleGraph, c1, c2) -> list[tuple[int, int]]:
    """Edges {i,j} of g with i in c1\\c2 and j in c2\\c1.  Both arguments must
    be cycles of g (consecutive vertices adjacent, all distinct)."""
    v1 = set(_check_cycle_of(g, c1))
    v2 = set(_check_cycle_of(g, c2))
    return _cross_edges(g, v1, v2)


def odd_cycle_condition(g: SimpleGraph):
    """(True, None) iff every two induced odd cycles (triangles included) share
    a vertex or are joined by a bridge; else (False, (c1, c2))."""
    cycles = induced_cycles(g, 3, "odd")
    for a, b in combinations(cycles, 2):
        sa, sb = set(a), set(b)
        if sa & sb:
            continue
        if not _cross_edges(g, sa, sb):
            return False, (a, b)
    return True, None


def star_graph(gbar: SimpleGraph) -> LoopGraph:
    """The graph on n+1 vertices with the edges of gbar, the hub edges {i, n+1}
    for every i in 1..n, and one loop at the hub n+1."""
    hub = gbar.n + 1
    edges = set(gbar.edges) | {(i, hub) for i in range(1, hub)}
    return LoopGraph(hub, frozenset(edges), frozenset({hub}))


def clique_sum(g1: SimpleGraph, g2: SimpleGraph, identification: dict):
    """Glue g2 onto g1 along ``identification`` (g2 vertex -> g1 vertex), whose
    domain/image must be cliques in the respective graphs.  Returns the summed
    graph and the full g2 -> new-vertex map."""
    dom = sorted(identification)
    img = [identification[v] for v in dom]
    if len(set(img)) != len(img):
        raise ValueError("identification must be injective")
    for v in dom:
        if not 1 <= v <= g2.n:
            raise ValueError(f"identified vertex {v} not in g2")
    for v in img:
        if not 1 <= v <= g1.n:
            raise ValueError(f"identified image {v} not in g1")
    for a, b in combinations(dom, 2):
        if not g2.has_edge(a, b):
            raise ValueError(f"overlap not a clique in g2: missing {{{a},{b}}}")
    for a, b in combinations(img, 2):
        if not g1.has_edge(a, b):
            raise ValueError(f"overlap not a clique in g1: missing {{{a},{b}}}")
    relabel = dict(identification)
    nxt = g1.n
    for v in range(1, g2.n + 1):
        if v not in relabel:
            nxt += 1
            relabel[v] = nxt
    edges = set(g1.edges) | {_norm_edge(relabel[a], relabel[b]) for a, b in g2.edges}
    return SimpleGraph(nxt, frozenset(edges)), relabel


def induced_subgraph(g: SimpleGraph, vs):
    """Subgraph induced on ``vs``, vertices relabeled 1..|vs| in sorted order.
    Returns (subgraph, old->new map)."""
    verts = sorted(set(vs))
    if verts and not (1 <= verts[0] and verts[-1] <= g.n):
        raise ValueError("vertex subset out of range")
    relabel = {v: k + 1 for k, v in enumerate(verts)}
    edges = [(relabel[i], relabel[j]) for i, j in g.edges if i in relabel and j in relabel]
    return SimpleGraph.from_edges(len(verts), edges), relabel


# ---------------------------------------------------------------------------
# named families


def _cycle_edges(vs: list) -> list[tuple[int, int]]:
    return [_norm_edge(a, b) for a, b in zip(vs, vs[1:] + vs[:1])]


def _cycle_graph(m: int) -> SimpleGraph:
    return SimpleGraph.from_edges(m, _cycle_edges(list(range(1, m + 1))))


def _disjoint_union(g1: SimpleGraph, g2: SimpleGraph) -> SimpleGraph:
    shift = g1.n
    edges = set(g1.edges) | {(i + shift, j + shift) for i, j in g2.edges}
    return SimpleGraph(g1.n + g2.n, frozenset(edges))


def family(name: str, *params: int, seed: int = 0, p: float = 0.5) -> SimpleGraph:
    """Construct a named graph family instance.

    complete(n); complement_of_cycle(m); two_odd_holes(k, l);
    kn_minus_edge(n); hole_antihole(m1, m2); two_antiholes(m1, m2, shared);
    random_alpha2(n) with keyword edge probability ``p`` and ``seed``.
    """
    if name == "complete":
        (n,) = params
        if n < 1:
            raise ValueError("complete(n) needs n >= 1")
        return SimpleGraph.from_edges(n, combinations(range(1, n + 1), 2))
    if name == "complement_of_cycle":
        (m,) = params
        if m < 3:
            raise ValueError("complement_of_cycle(m) needs m >= 3")
        return complement(_cycle_graph(m))
    if name == "two_odd_holes":
        k, l = params
        if k < 1 or l < 1:
            raise ValueError("two_odd_holes(k, l) needs k, l >= 1")
        return complement(_disjoint_union(_cycle_graph(2 * k + 1), _cycle_graph(2 * l + 1)))
    if name == "kn_minus_edge":
        (n,) = params
        if n < 2:
            raise ValueError("kn_minus_edge(n) needs n >= 2")
        edges = [e for e in combinations(range(1, n + 1), 2) if e != (1, 2)]
        return SimpleGraph.from_edges(n, edges)
    if name == "hole_antihole":
        m1, m2 = params
        if m1 < 3 or m2 < 3:
            raise ValueError("hole_antihole(m1, m2) needs lengths >= 3")
        gbar = _disjoint_union(_cycle_graph(m1), complement(_cycle_graph(m2)))
        return complement(gbar)
    if name == "two_antiholes":
        m1, m2, shared = params
        if m1 < 3 or m2 < 3:
            raise ValueError("two_antiholes(m1, m2, shared) needs lengths >= 3")
        a1 = complement(_cycle_graph(m1))
        a2 = complement(_cycle_graph(m2))
        if not shared:
            return complement(_disjoint_union(a1, a2))
        # second antihole cycle (m1, m1+1, ..., m1+m2-1) shares vertex m1 with the first
        n = m1 + m2 - 1
        cyc2 = [m1 + i for i in range(m2)]
        cyc2_edges = set(_cycle_edges(cyc2))
        anti2 = [e for e in combinations(sorted(cyc2), 2) if e not in cyc2_edges]
        gbar = SimpleGraph.from_edges(n, list(a1.edges) + anti2)
        return complement(gbar)
    if name == "random_alpha2":
        (n,) = params
        if n < 2:
            raise ValueError("random_alpha2(n) needs n >= 2")
        rng = random.Random(seed)
        pairs = list(combinations(range(1, n + 1), 2))
        rng.shuffle(pairs)
        gbar_edges: set = set()
        adj: dict = {v: set() for v in range(1, n + 1)}
        for i, j in pairs:
            if rng.random() < p and not (adj[i] & adj[j]):
                gbar_edges.add((i, j))
                adj[i].add(j)
                adj[j].add(i)
        if not gbar_edges:
            i, j = sorted(rng.sample(range(1, n + 1), 2))
            gbar_edges.add((i, j))
        return complement(SimpleGraph.from_edges(n, gbar_edges))
    raise ValueError(f"unknown family {name!r}")


# ---------------------------------------------------------------------------
# graph text format: `p <n> <m>` header, `e <i> <j>` edges, `l <i>` loops,
# `c ...` comments


def format_graph(g) -> str:
    lines = [f"p {g.n} {len(g.edges)}"]
    lines += [f"e {i} {j}" for i, j in sorted(g.edges)]
    if isinstance(g, LoopGraph):
        lines += [f"l {v}" for v in sorted(g.loops)]
    return "\n".join(lines) + "\n"


def parse_graph(text: str):
    """Parse the graph text format; returns a LoopGraph when any `l` line is
    present, else a SimpleGraph."""
    n = m = None
    edges: list = []
    loops: list = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        try:
            if parts[0] == "p":
                if n is not None:
                    raise ValueError("duplicate p line")
                n, m = int(parts[1]), int(parts[2])
            elif parts[0] == "e":
                if n is None:
                    raise ValueError("e line before p line")
                edges.append(_norm_edge(int(parts[1]), int(parts[2])))
            elif parts[0] == "l":
                if n is None:
                    raise ValueError("l line before p line")
                loops.append(int(parts[1]))
            else:
                raise ValueError(f"unknown record {parts[0]!r}")
        except (IndexError, ValueError) as exc:
            raise GraphFormatError(f"line {lineno}: {exc}") from None
    if n is None:
        raise GraphFormatError("missing p line")
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}")
    try:
        if loops:
            return LoopGraph.from_parts(n, edges, loops)
        return SimpleGraph.from_edges(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None
