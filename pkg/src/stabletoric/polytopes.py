"""Point configurations of stable set and edge polytopes, exact minor
computation, cone/semigroup membership, the integer-decomposition (normality)
oracle, and the explicit non-normality witness constructors."""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import exactlp, matrices
from .graphs import LoopGraph, SimpleGraph, complement, induced_cycles, stable_sets


@dataclass(frozen=True)
class PointConfiguration:
    """Ordered list of nonnegative integer points with labels.  ``homogenized``
    means every point carries an implicit trailing 1; the last coordinate of a
    homogenized target vector is its level (degree)."""

    dim: int
    points: tuple
    labels: tuple
    kind: str = "generic"  # stable-set | edge | generic
    homogenized: bool = True

    def __post_init__(self):
        for pt in self.points:
            if len(pt) != self.dim:
                raise ValueError("point dimension mismatch")
            if any(x < 0 for x in pt):
                raise ValueError("coordinates must be nonnegative")

    def __len__(self):
        return len(self.points)

    def hpoints(self) -> list[tuple]:
        """Points with the homogenizing 1 appended."""
        if not self.homogenized:
            return [tuple(pt) for pt in self.points]
        return [tuple(pt) + (1,) for pt in self.points]

    def index_of_label(self, label) -> int:
        return self.labels.index(label)


@dataclass(frozen=True)
class RationalCertificate:
    """Nonnegative rational multipliers on point indices whose weighted sum
    reproduces a target exactly."""

    entries: tuple  # of (point index, Fraction)

    def check(self, config: PointConfiguration, target) -> bool:
        pts = config.hpoints()
        total = [Fraction(0)] * len(target)
        for idx, coeff in self.entries:
            if coeff < 0:
                return False
            for i, x in enumerate(pts[idx]):
                total[i] += coeff * x
        return all(a == b for a, b in zip(total, target))


def stable_set_polytope(g: SimpleGraph) -> PointConfiguration:
    """One 0/1 indicator point per stable set of g, in canonical order."""
    fam = stable_sets(g)
    pts = []
    for w in fam:
        vec = [0] * g.n
        for v in w:
            vec[v - 1] = 1
        pts.append(tuple(vec))
    return PointConfiguration(g.n, tuple(pts), tuple(fam.sets), kind="stable-set")


def edge_polytope(h: LoopGraph) -> PointConfiguration:
    """One point e_i + e_j per edge and 2 e_i per loop, in the graph's
    canonical generator order."""
    pts = []
    labels = []
    for i, j in h.generators():
        vec = [0] * h.n
        vec[i - 1] += 1
        vec[j - 1] += 1
        pts.append(tuple(vec))
        labels.append((i, j))
    return PointConfiguration(h.n, tuple(pts), tuple(labels), kind="edge")


# ---------------------------------------------------------------------------
# unimodularity


@dataclass(frozen=True)
class UnimodularityResult:
    status: str  # unimodular | not-unimodular | infeasible
    common_value: int | None = None
    refuting_columns: tuple | None = None
    refuting_value: int | None = None
    reference_columns: tuple | None = None
    reference_value: int | None = None
    note: str = ""

    def __bool__(self):
        if self.status == "infeasible":
            raise ValueError("unimodularity undecided: " + self.note)
        return self.status == "unimodular"


def _graph_from_stable_labels(config: PointConfiguration) -> SimpleGraph | None:
    """Reconstruct the complement graph whose edges are the 2-element labels."""
    if config.kind != "stable-set":
        return None
    pairs = [lab for lab in config.labels if len(lab) == 2]
    singles = {lab[0] for lab in config.labels if len(lab) == 1}
    if () not in config.labels or singles != set(range(1, config.dim + 1)):
        return None
    return SimpleGraph.from_edges(config.dim, pairs)


def _odd_cycle_minor(config: PointConfiguration):
    """The refutation recipe: columns of an induced odd cycle of the complement
    graph, the origin, and the off-cycle unit points."""
    gbar = _graph_from_stable_labels(config)
    if gbar is None:
        return None
    cycles = induced_cycles(gbar, 3, "odd")
    if not cycles:
        return None
    cyc = cycles[0]
    cols = []
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        cols.append(config.index_of_label(tuple(sorted((a, b)))))
    cols.append(config.index_of_label(()))
    in_cycle = set(cyc)
    for j in range(1, config.dim + 1):
        if j not in in_cycle:
            cols.append(config.index_of_label((j,)))
    return tuple(sorted(cols))


def is_unimodular(config: PointConfiguration, guard: int = 10_000_000) -> UnimodularityResult:
    """Decide whether all nonzero maximal minors of the homogenized point matrix
    share one absolute value.  Exhaustive enumeration runs only below the guard;
    otherwise a refuting minor is searched along odd-cycle column patterns and
    the result may be ``infeasible``."""
    hpts = config.hpoints()
    k = len(hpts[0]) if hpts else 0
    if matrices.rank_int(hpts) != k:
        raise ValueError("configuration is rank-deficient; maximal minors all vanish")

    refute = _odd_cycle_minor(config)
    if refute is not None:
        val = abs(matrices.det_bareiss([hpts[i] for i in refute]))
        base = _basis_columns(config)
        base_val = abs(matrices.det_bareiss([hpts[i] for i in base])) if base else None
        if base_val and val not in (0, base_val):
            return UnimodularityResult(
                "not-unimodular",
                refuting_columns=refute, refuting_value=val,
                reference_columns=base, reference_value=base_val)

    try:
        examples, _total = matrices.maximal_minor_values(hpts, guard=guard)
    except matrices.MinorScanInfeasible as exc:
        return UnimodularityResult("infeasible", note=str(exc))
    nonzero = sorted(v for v in examples if v != 0)
    if len(nonzero) <= 1:
        common = nonzero[0] if nonzero else None
        return UnimodularityResult("unimodular", common_value=common)
    return UnimodularityResult(
        "not-unimodular",
        refuting_columns=tuple(examples[nonzero[-1]]), refuting_value=nonzero[-1],
        reference_columns=tuple(examples[nonzero[0]]), reference_value=nonzero[0])


def _basis_columns(config: PointConfiguration):
    """For stable set configurations: the origin and the unit points (the
    paper's determinant-one submatrix)."""
    if config.kind != "stable-set":
        return None
    try:
        cols = [config.index_of_label(())]
        cols += [config.index_of_label((j,)) for j in range(1, config.dim + 1)]
    except ValueError:
        return None
    return tuple(cols)


# ---------------------------------------------------------------------------
# membership


def cone_membership(target, config: PointConfiguration):
    """Exact rational feasibility of target = sum lambda_i a_i with lambda >= 0
    over the homogenized points.  Returns (bool, certificate or None)."""
    hpts = config.hpoints()
    if hpts and len(target) != len(hpts[0]):
        raise ValueError("target dimension must match homogenized points")
    lam = exactlp.nonneg_solve(hpts, tuple(target))
    if lam is None:
        return False, None
    entries = tuple((i, l) for i, l in enumerate(lam) if l != 0)
    return True, RationalCertificate(entries)


def semigroup_membership(target, config: PointConfiguration):
    """Exhaustive decision: is target a sum of exactly d homogenized points,
    d being the target's trailing coordinate?  Returns (bool, decomposition)
    with the decomposition as a multiset of point indices."""
    hpts = config.hpoints()
    if hpts and len(target) != len(hpts[0]):
        raise ValueError("target dimension must match homogenized points")
    d = target[-1]
    if d < 0 or any(x < 0 for x in target):
        return False, None
    if d != int(d):
        return False, None
    d = int(d)
    m = len(hpts)
    sizes = [sum(p[:-1]) for p in hpts]
    max_size_from = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        max_size_from[i] = max(sizes[i], max_size_from[i + 1])
    chosen: list[int] = []

    def search(remaining: list[int], r: int, start: int) -> bool:
        total = sum(remaining[:-1])
        if r == 0:
            return total == 0
        if start >= m or total > r * max_size_from[start]:
            return False
        for i in range(start, m):
            pt = hpts[i]
            if sizes[i] > total:
                continue
            nxt = [a - b for a, b in zip(remaining, pt)]
            if min(nxt) < 0:
                continue
            chosen.append(i)
            if search(nxt, r - 1, i):
                return True
            chosen.pop()
        return False

    if search(list(target), d, 0):
        return True, tuple(chosen)
    return False, None


# ---------------------------------------------------------------------------
# integer decomposition property oracle


@dataclass(frozen=True)
class IdpVerdict:
    status: str  # normal-up-to | nonnormal
    dmax: int
    witness: tuple | None = None
    witness_level: int | None = None

    @property
    def normal_within_budget(self) -> bool:
        return self.status == "normal-up-to"


def _clique_bounds(config: PointConfiguration):
    """Sound prefix inequalities for stable set polytopes: the coordinates of
    any clique of the underlying graph sum to at most d.  Cliques of the graph
    are the stable sets of its complement, which the labels encode."""
    gbar = _graph_from_stable_labels(config)
    if gbar is None:
        return []
    from .graphs import _stable_masks, adjacency_masks
    adj = adjacency_masks(gbar)
    cliques = []
    for w in _stable_masks(gbar):
        if bin(w).count("1") < 2:
            continue
        extendable = any(not w >> (v - 1) & 1 and not adj[v] & w
                         for v in range(1, gbar.n + 1))
        if not extendable:
            cliques.append([i for i in range(config.dim) if w >> i & 1])
    return cliques


def _has_prefix(sorted_list: list, prefix: tuple) -> bool:
    i = bisect_left(sorted_list, prefix)
    return i < len(sorted_list) and sorted_list[i][: len(prefix)] == prefix


def idp_check(config: PointConfiguration, dmax: int) -> IdpVerdict:
    """Search levels d = 2..dmax of the dilation for a lattice point of the cone
    that is not a sum of d generators.  The first such point (ascending level,
    then lexicographic order) is returned as the witness; otherwise the verdict
    is normality up to dmax only."""
    if dmax < 2:
        raise ValueError("dmax must be >= 2")
    hpts = config.hpoints()
    n = config.dim
    raw = [p[:-1] for p in hpts]
    coord_max = [max(p[i] for p in raw) if raw else 0 for i in range(n)]
    cliques = _clique_bounds(config)
    max_size = max((sum(p) for p in raw), default=0)

    level_sums = {tuple(p) for p in raw}  # level 1
    for d in range(2, dmax + 1):
        level_sums = {tuple(a + b for a, b in zip(s, p)) for s in level_sums for p in raw}
        sums_sorted = sorted(level_sums)
        witness = _scan_level(raw, n, d, coord_max, cliques, max_size, sums_sorted, hpts)
        if witness is not None:
            ok, _ = semigroup_membership(witness + (d,), config)
            assert not ok, "dilation scan disagrees with the membership search"
            return IdpVerdict("nonnormal", dmax, witness + (d,), d)
    return IdpVerdict("normal-up-to", dmax)


def _scan_level(raw, n, d, coord_max, cliques, max_size, sums_sorted, hpts):
    """DFS over coordinate prefixes.  A prefix survives if it passes the valid
    inequalities (clique sums and total size), and then either extends to a
    known level-d generator sum (cheap lookup) or the exact LP for completing
    it inside the cone is feasible; full points outside the sum set that pass
    the final LP are witnesses."""
    cliques_at = [[] for _ in range(n)]
    for cid, idxs in enumerate(cliques):
        for i in idxs:
            cliques_at[i].append(cid)
    clique_sum = [0] * len(cliques)
    prefix: list[int] = []

    def lp_extendable() -> bool:
        k = len(prefix)
        cols = [p[:k] + (1,) for p in hpts]
        return exactlp.nonneg_solve(cols, tuple(prefix) + (d,)) is not None

    def rec(total: int) -> tuple | None:
        k = len(prefix)
        if k == n:
            z = tuple(prefix)
            if _has_prefix(sums_sorted, z):
                return None
            return z if lp_extendable() else None
        for val in range(0, d * coord_max[k] + 1):
            if total + val > d * max_size:
                break
            ok = True
            for cid in cliques_at[k]:
                if clique_sum[cid] + val > d:
                    ok = False
                    break
            if not ok:
                continue
            prefix.append(val)
            for cid in cliques_at[k]:
                clique_sum[cid] += val
            if _has_prefix(sums_sorted, tuple(prefix)) or lp_extendable():
                found = rec(total + val)
                if found is not None:
                    return found
            for cid in cliques_at[k]:
                clique_sum[cid] -= val
            prefix.pop()
        return None

    return rec(0)


# ---------------------------------------------------------------------------
# explicit witnesses from the non-normality proofs


def _validate_antihole(g: SimpleGraph, cyc) -> tuple:
    """An antihole of the complement of g is an induced cycle of g itself, in
    the given cyclic vertex order."""
    c = tuple(cyc)
    if len(c) < 5 or len(c) % 2 == 0:
        raise ValueError(f"{c}: odd antihole must have odd length >= 5")
    _validate_induced_cycle_order(g, c)
    return c


def _validate_hole_of_complement(g: SimpleGraph, cyc) -> tuple:
    c = tuple(cyc)
    if len(c) < 5 or len(c) % 2 == 0:
        raise ValueError(f"{c}: odd hole must have odd length >= 5")
    _validate_induced_cycle_order(complement(g), c)
    return c


def _validate_induced_cycle_order(h: SimpleGraph, c: tuple) -> None:
    if len(set(c)) != len(c):
        raise ValueError(f"{c}: repeated vertices")
    cycset = set(zip(c, c[1:] + c[:1]))
    for a, b in combinations(c, 2):
        consecutive = (a, b) in cycset or (b, a) in cycset
        if consecutive != h.has_edge(a, b):
            raise ValueError(f"{c}: not an induced cycle in the given order")


def _no_bridges(gbar: SimpleGraph, s1: set, s2: set) -> bool:
    from .graphs import _cross_edges
    return not _cross_edges(gbar, s1, s2)


def _cycle_stable_sets(cycle: tuple, size: int) -> list[tuple]:
    """Stable sets of the cycle graph on the given vertex sequence, of the
    given cardinality, as sorted vertex tuples."""
    m = len(cycle)
    consec = {frozenset((cycle[i], cycle[(i + 1) % m])) for i in range(m)}
    out = []
    for sub in combinations(sorted(cycle), size):
        if all(frozenset(p) not in consec for p in combinations(sub, 2)):
            out.append(tuple(sub))
    return out


def proof_witness(kind: str, g: SimpleGraph, cycles) -> tuple:
    """The explicit integer vector and rational cone certificate from the
    non-normality proofs.  ``cycles`` holds the two relevant vertex sequences;
    antiholes are induced cycles of g, holes induced cycles of its complement.

    Returns (alpha, certificate) over the stable set configuration of g."""
    gbar = complement(g)
    config = stable_set_polytope(g)
    n = g.n
    c1, c2 = cycles

    def unit(vs, hom):
        vec = [0] * (n + 1)
        for v in vs:
            vec[v - 1] += 1
        vec[n] = hom
        return tuple(vec)

    def idx(w) -> int:
        return config.index_of_label(tuple(sorted(w)))

    if kind == "two-antiholes":
        c1 = _validate_antihole(g, c1)
        c2 = _validate_antihole(g, c2)
        k, l = len(c1) // 2, len(c2) // 2
        if k < 2 or l < 2:
            raise ValueError("two-antiholes needs k, l >= 2")
        if set(c1) & set(c2):
            raise ValueError("antiholes must be vertex-disjoint")
        if not _no_bridges(gbar, set(c1), set(c2)):
            raise ValueError("antiholes joined by a bridge in the complement")
        alpha = tuple(a + b for a, b in zip(unit(c1, 0), unit(c2, 5)))
        entries = [(idx(w), Fraction(1, k)) for w in _cycle_stable_sets(c1, k)]
        entries += [(idx(w), Fraction(1, l)) for w in _cycle_stable_sets(c2, l)]
        leftover = Fraction(k * l - k - l, k * l)
        if leftover:
            entries.append((idx(()), leftover))
        return alpha, RationalCertificate(tuple(sorted(entries)))

    if kind == "shared-vertex-antiholes":
        c1 = _validate_antihole(g, c1)
        c2 = _validate_antihole(g, c2)
        k, l = len(c1) // 2, len(c2) // 2
        if k < 3 or l < 3:
            raise ValueError("shared-vertex-antiholes needs length >= 7 (k, l >= 3)")
        shared = set(c1) & set(c2)
        if len(shared) != 1:
            raise ValueError("antiholes must share exactly one vertex")
        if not _no_bridges(gbar, set(c1), set(c2)):
            raise ValueError("antiholes joined by a bridge in the complement")
        (i1,) = shared
        r1 = c1[c1.index(i1):] + c1[: c1.index(i1)]
        r2 = c2[c2.index(i1):] + c2[: c2.index(i1)]
        alpha = list(unit(r1[1:], 0))
        for v in r2[1:]:
            alpha[v - 1] += 1
        alpha[i1 - 1] = 3
        alpha[n] = 5
        alpha = tuple(alpha)

        def special(rot, kk):
            ends = {rot[1], rot[-1]}
            return [w for w in _cycle_stable_sets(rot, kk)
                    if rot[0] in w or ends <= set(w)]

        entries = [(idx(w), Fraction(1, k - 1)) for w in special(r1, k)]
        entries += [(idx(w), Fraction(1, l - 1)) for w in special(r2, l)]
        leftover = 1 - Fraction(1, k - 1) - Fraction(1, l - 1)
        if leftover:
            entries.append((idx((i1,)), leftover))
        return alpha, RationalCertificate(tuple(sorted(entries)))

    if kind == "hole-antihole":
        c1 = _validate_hole_of_complement(g, c1)
        c2 = _validate_antihole(g, c2)
        k, l = len(c1) // 2, len(c2) // 2
        if set(c1) & set(c2):
            raise ValueError("hole and antihole must be vertex-disjoint")
        if not _no_bridges(gbar, set(c1), set(c2)):
            raise ValueError("hole and antihole joined by a bridge in the complement")
        alpha = tuple(a + b for a, b in zip(unit(c1, 0), unit(c2, k + 3)))
        m1 = len(c1)
        pairs = [tuple(sorted((c1[i], c1[(i + 1) % m1]))) for i in range(m1)]
        entries = [(idx(w), Fraction(1, 2)) for w in pairs]
        entries += [(idx(w), Fraction(1, l)) for w in _cycle_stable_sets(c2, l)]
        leftover = Fraction(l - 2, 2 * l)
        if leftover:
            entries.append((idx(()), leftover))
        return alpha, RationalCertificate(tuple(sorted(entries)))

    raise ValueError(f"unknown witness kind {kind!r}")


def face_restriction(config: PointConfiguration, zero_coords) -> PointConfiguration:
    """Sub-configuration of points vanishing on ``zero_coords`` (1-based), with
    those coordinates projected away."""
    zero = {c - 1 for c in zero_coords}
    if any(c < 0 or c >= config.dim for c in zero):
        raise ValueError("zero coordinate out of range")
    keep = [i for i in range(config.dim) if i not in zero]
    relabel = {old + 1: new + 1 for new, old in enumerate(keep)}
    pts = []
    labels = []
    for pt, lab in zip(config.points, config.labels):
        if all(pt[c] == 0 for c in zero):
            pts.append(tuple(pt[i] for i in keep))
            if config.kind == "stable-set":
                labels.append(tuple(relabel[v] for v in lab))
            else:
                labels.append(lab)
    return PointConfiguration(len(keep), tuple(pts), tuple(labels), kind=config.kind)


# ---------------------------------------------------------------------------
# witness file format: `w <d> <z_1> ... <z_n>` then `λ <point-index> <num>/<den>`


def format_witness(alpha, certificate: RationalCertificate | None = None) -> str:
    d = alpha[-1]
    lines = ["w " + " ".join(str(x) for x in (d,) + tuple(alpha[:-1]))]
    if certificate is not None:
        for idx, coeff in certificate.entries:
            f = Fraction(coeff)
            lines.append(f"λ {idx + 1} {f.numerator}/{f.denominator}")
    return "\n".join(lines) + "\n"


def parse_witness(text: str):
    alpha = None
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "w":
            vals = [int(x) for x in parts[1:]]
            alpha = tuple(vals[1:]) + (vals[0],)
        elif parts[0] == "λ":
            num, den = parts[2].split("/")
            entries.append((int(parts[1]) - 1, Fraction(int(num), int(den))))
        else:
            raise ValueError(f"line {lineno}: unknown record {parts[0]!r}")
    if alpha is None:
        raise ValueError("missing w line")
    return alpha, RationalCertificate(tuple(entries)) if entries else None
