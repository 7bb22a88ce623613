"""Exhaustive graph generation for the verification suites: labeled sweeps and
isomorphism-class representatives, with optional vertex colors for loop
placement."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product

from .graphs import SimpleGraph, adjacency_masks


def all_labeled_graphs(n: int):
    """Yield every labeled simple graph on n vertices (2^C(n,2) graphs)."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield SimpleGraph(n, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))


def is_triangle_free(g: SimpleGraph) -> bool:
    adj = adjacency_masks(g)
    return all(not adj[i] & adj[j] for i, j in g.edges)


def labeled_triangle_free_graphs(n: int):
    for g in all_labeled_graphs(n):
        if is_triangle_free(g):
            yield g


def _refined_keys(g: SimpleGraph, cols: tuple) -> list:
    """Iterated neighborhood refinement of (color, degree) vertex keys."""
    adj = adjacency_masks(g)
    nbrs = [[u for u in range(1, g.n + 1) if adj[v] >> (u - 1) & 1] for v in range(g.n + 1)]
    keys = [(cols[v - 1], len(nbrs[v])) for v in range(1, g.n + 1)]
    for _ in range(g.n):
        nxt = [(keys[v - 1], tuple(sorted(keys[u - 1] for u in nbrs[v])))
               for v in range(1, g.n + 1)]
        ranks = {k: r for r, k in enumerate(sorted(set(nxt)))}
        nxt = [(cols[v - 1], ranks[nxt[v - 1]]) for v in range(1, g.n + 1)]
        if len(set(nxt)) == len(set(keys)):
            keys = nxt
            break
        keys = nxt
    return keys


def canonical_form(g: SimpleGraph, colors=None) -> tuple:
    """Isomorphism-invariant canonical form: the lexicographically smallest
    edge tuple over relabelings that send each refinement class onto a fixed
    block of target labels."""
    cols = tuple(colors) if colors is not None else (0,) * g.n
    keys = _refined_keys(g, cols)
    classes: dict = {}
    for v in range(1, g.n + 1):
        classes.setdefault(keys[v - 1], []).append(v)
    ordered = [classes[k] for k in sorted(classes)]
    # class i occupies the contiguous target block after classes 0..i-1
    blocks = []
    start = 1
    for cls in ordered:
        blocks.append(list(range(start, start + len(cls))))
        start += len(cls)
    best = None
    for mix in product(*[permutations(b) for b in blocks]):
        perm = [0] * (g.n + 1)
        for cls, images in zip(ordered, mix):
            for src, dst in zip(cls, images):
                perm[src] = dst
        edges = tuple(sorted(tuple(sorted((perm[i], perm[j]))) for i, j in g.edges))
        if best is None or edges < best:
            best = edges
    class_shape = tuple((k, len(classes[k])) for k in sorted(classes))
    return (g.n, class_shape, best)


@lru_cache(maxsize=None)
def unlabeled_graphs(n: int, triangle_free: bool = False) -> tuple:
    """Representatives of all isomorphism classes on n vertices, built by
    extending the (n-1)-vertex classes with every neighborhood of a new vertex."""
    if n == 0:
        return (SimpleGraph(0, frozenset()),)
    if n == 1:
        return (SimpleGraph(1, frozenset()),)
    reps = []
    seen = set()
    for g in unlabeled_graphs(n - 1, triangle_free):
        if triangle_free:
            # the new vertex's neighborhood must be independent in g
            from .graphs import stable_sets
            hoods = [set(w) for w in stable_sets(g)]
        else:
            hoods = [set(c) for k in range(g.n + 1) for c in combinations(range(1, g.n + 1), k)]
        for hood in hoods:
            edges = set(g.edges) | {(v, n) for v in hood}
            cand = SimpleGraph(n, frozenset(edges))
            key = canonical_form(cand)
            if key not in seen:
                seen.add(key)
                reps.append(cand)
    return tuple(reps)


def is_connected(g: SimpleGraph) -> bool:
    if g.n <= 1:
        return True
    adj = adjacency_masks(g)
    comp = 1
    frontier = 1
    full = (1 << g.n) - 1
    while frontier:
        nxt = 0
        f = frontier
        v = 1
        while f:
            if f & 1:
                nxt |= adj[v]
            f >>= 1
            v += 1
        frontier = nxt & ~comp
        comp |= frontier
    return comp == full


def connected_unlabeled_graphs(n: int) -> tuple:
    return tuple(g for g in unlabeled_graphs(n) if is_connected(g))


def vertex_orbit_representatives(g: SimpleGraph) -> list[int]:
    """One vertex per automorphism orbit (used to place a loop up to symmetry)."""
    reps = []
    seen = set()
    for v in range(1, g.n + 1):
        colors = [0] * g.n
        colors[v - 1] = 1
        key = canonical_form(g, colors)
        if key not in seen:
            seen.add(key)
            reps.append(v)
    return reps
