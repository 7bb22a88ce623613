"""Monomial orders, a binomial-only Buchberger engine, elimination-based toric
ideal computation, minimal generating sets, initial ideals, and the search for
quadratic Groebner bases.

Binomials are pure differences y^{u+} - y^{u-} stored as integer exponent
vectors; S-pairs and reductions of such binomials stay pure differences, so no
general polynomial arithmetic is needed.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass

ORDER_KINDS = ("lex", "graded-lex", "graded-reverse-lex")


@dataclass(frozen=True)
class Binomial:
    """y^{u+} - y^{u-} for the positive/negative parts of the vector u."""

    u: tuple

    @staticmethod
    def from_sides(plus, minus) -> "Binomial":
        return Binomial(tuple(p - q for p, q in zip(plus, minus)))

    @property
    def is_zero(self) -> bool:
        return not any(self.u)

    def plus(self) -> tuple:
        return tuple(x if x > 0 else 0 for x in self.u)

    def minus(self) -> tuple:
        return tuple(-x if x < 0 else 0 for x in self.u)

    def degree(self) -> int:
        """Degree of a standard-homogeneous binomial (= |u+|)."""
        return sum(x for x in self.u if x > 0)

    def flipped(self) -> "Binomial":
        return Binomial(tuple(-x for x in self.u))

    def render(self, labels=None) -> str:
        def mono(exps):
            parts = []
            for i, e in enumerate(exps):
                if e:
                    name = f"y{{{','.join(map(str, labels[i]))}}}" if labels else f"y{i + 1}"
                    parts.append(name if e == 1 else f"{name}^{e}")
            return "*".join(parts) if parts else "1"

        return f"{mono(self.plus())} - {mono(self.minus())}"


@dataclass(frozen=True)
class MonomialOrder:
    """A total monomial order: ``kind`` applied per block of the variable
    permutation (most significant variable first); the first ``elim`` permuted
    variables form a block that strictly dominates the rest; an optional
    nonnegative weight row is compared before the kind inside each block."""

    kind: str = "graded-reverse-lex"
    perm: tuple | None = None
    elim: int = 0
    weights: tuple | None = None

    def describe(self) -> str:
        parts = [self.kind]
        if self.perm is not None:
            parts.append("perm=" + ",".join(str(v + 1) for v in self.perm))
        if self.elim:
            parts.append(f"elim={self.elim}")
        if self.weights is not None:
            parts.append("weights=" + ",".join(map(str, self.weights)))
        return " ".join(parts)

    def key_function(self, nvars: int):
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"unknown order kind {self.kind!r}")
        perm = self.perm if self.perm is not None else tuple(range(nvars))
        if sorted(perm) != list(range(nvars)):
            raise ValueError("perm must be a permutation of the variable indices")
        if not 0 <= self.elim <= nvars:
            raise ValueError("elimination block out of range")
        if self.weights is not None and (len(self.weights) != nvars
                                         or any(w < 0 for w in self.weights)):
            raise ValueError("weight row must be nonnegative, one entry per variable")
        blocks = [perm[: self.elim], perm[self.elim:]] if self.elim else [perm]
        blocks = [b for b in blocks if b]
        kind = self.kind
        weights = self.weights

        def block_key(e, block):
            if kind == "lex":
                base = tuple(e[v] for v in block)
            elif kind == "graded-lex":
                base = (sum(e[v] for v in block),) + tuple(e[v] for v in block)
            else:  # graded-reverse-lex
                base = (sum(e[v] for v in block),) + tuple(-e[v] for v in reversed(block))
            if weights is not None:
                base = (sum(weights[v] * e[v] for v in block),) + base
            return base

        def key(e):
            out = ()
            for b in blocks:
                out += block_key(e, b)
            return out

        return key


def compare(order: MonomialOrder, a, b) -> str:
    """Total comparison of two exponent tuples: 'less', 'equal', or 'greater'."""
    if len(a) != len(b):
        raise ValueError("monomials must share the variable set")
    key = order.key_function(len(a))
    ka, kb = key(a), key(b)
    if ka == kb:
        return "equal" if tuple(a) == tuple(b) else _tiebreak(a, b)
    return "less" if ka < kb else "greater"


def _tiebreak(a, b) -> str:
    # distinct monomials never share a key for the supported kinds
    raise AssertionError(f"order key collision for distinct monomials {a} vs {b}")


@dataclass(frozen=True)
class GroebnerBasis:
    order: MonomialOrder
    elements: tuple
    reduced: bool = True

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def max_degree(self) -> int:
        return max((b.degree() for b in self.elements), default=0)


class BasisSizeExceeded(RuntimeError):
    """The Buchberger basis grew past the configured cap; no silent truncation."""


class NonSaturatedIdeal(ValueError):
    """A reduced basis element carries a common monomial factor, so the ideal
    is not monomial-saturated and cannot be represented by exponent vectors.
    Toric ideals (being prime) never trigger this."""


class BuchbergerEngine:
    """Incremental Buchberger completion for pure-difference binomials.

    Pairs are processed in normal strategy order (grading degree of the lcm,
    then the order key of the lcm, then indices); Buchberger's product and
    chain criteria prune the queue.  ``complete(max_degree=d)`` stops once the
    cheapest pending pair exceeds degree d, which for homogeneous input yields
    a basis deciding membership up to degree d.
    """

    def __init__(self, nvars: int, order: MonomialOrder, grading=None,
                 max_basis: int = 20000, saturate: bool = False):
        self.nvars = nvars
        self.order = order
        self.key = order.key_function(nvars)
        self.grading = tuple(grading) if grading is not None else (1,) * nvars
        if len(self.grading) != nvars or any(w < 0 for w in self.grading):
            raise ValueError("grading must be nonnegative, one weight per variable")
        self.max_basis = max_basis
        # dividing S-pairs by their common monomial factor is sound only for
        # ideals equal to their monomial saturation (e.g. prime toric ideals)
        self.saturate = saturate
        self.plus: list = []       # leading monomials
        self.minus: list = []      # trailing monomials
        self.masks: list = []      # support bitmask of the leading monomial
        self.heap: list = []       # (pair degree, lcm key, i, j)
        self.pending: set = set()

    # -- monomial helpers ---------------------------------------------------

    def _wdeg(self, e) -> int:
        return sum(w * x for w, x in zip(self.grading, e))

    def _mask(self, e) -> int:
        m = 0
        for i, x in enumerate(e):
            if x:
                m |= 1 << i
        return m

    def check_homogeneous(self, b: Binomial) -> None:
        if self._wdeg(b.plus()) != self._wdeg(b.minus()):
            raise ValueError(f"generator {b.u} is not homogeneous for the grading")

    def normal_form_monomial(self, mono) -> tuple:
        changed = True
        while changed:
            changed = False
            mmask = self._mask(mono)
            for lt, tail, lmask in zip(self.plus, self.minus, self.masks):
                if lmask & ~mmask:
                    continue
                if all(l <= m for l, m in zip(lt, mono)):
                    mono = tuple(m - l + t for m, l, t in zip(mono, lt, tail))
                    changed = True
                    break
        return mono

    def normal_form_sides(self, p, m):
        """Reduce the two monomials of y^p - y^m; None when they collide.
        Common factors are preserved: sides are not divided by their gcd."""
        p = self.normal_form_monomial(p)
        m = self.normal_form_monomial(m)
        if p == m:
            return None
        return (p, m) if self.key(p) > self.key(m) else (m, p)

    def normal_form(self, b: Binomial) -> Binomial | None:
        sides = self.normal_form_sides(b.plus(), b.minus())
        if sides is None:
            return None
        return Binomial.from_sides(*sides)

    # -- completion ---------------------------------------------------------

    def add(self, b: Binomial, reduce_first: bool = True) -> bool:
        """Insert a generator; returns False when it reduces to zero."""
        self.check_homogeneous(b)
        return self._add_sides(b.plus(), b.minus(), reduce_first)

    def _strip_common(self, p, m):
        if any(a and b for a, b in zip(p, m)):
            c = tuple(min(a, b) for a, b in zip(p, m))
            p = tuple(a - x for a, x in zip(p, c))
            m = tuple(b - x for b, x in zip(m, c))
        return p, m

    def _add_sides(self, p, m, reduce_first: bool = True) -> bool:
        if self.saturate:
            p, m = self._strip_common(p, m)
        if reduce_first:
            sides = self.normal_form_sides(p, m)
            while sides is not None and self.saturate:
                p2, m2 = self._strip_common(*sides)
                if (p2, m2) == sides:
                    break
                sides = self.normal_form_sides(p2, m2)
        elif p == m:
            sides = None
        else:
            sides = (p, m) if self.key(p) > self.key(m) else (m, p)
        if sides is None:
            return False
        p, m = sides
        t = len(self.plus)
        self.plus.append(p)
        self.minus.append(m)
        self.masks.append(self._mask(p))
        if len(self.plus) > self.max_basis:
            raise BasisSizeExceeded(f"basis exceeded {self.max_basis} elements")
        for i in range(t):
            pi = self.plus[i]
            if not self.masks[i] & self.masks[t]:
                continue  # product criterion
            lcm = tuple(a if a > b else b for a, b in zip(pi, p))
            entry = (self._wdeg(lcm), self.key(lcm), i, t)
            heapq.heappush(self.heap, entry)
            self.pending.add((i, t))
        return True

    def _chain_skip(self, i: int, j: int, lcm) -> bool:
        for k in range(len(self.plus)):
            if k == i or k == j:
                continue
            if self.masks[k] & ~self._mask(lcm):
                continue
            if all(l <= m for l, m in zip(self.plus[k], lcm)):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a not in self.pending and b not in self.pending:
                    return True
        return False

    def complete(self, max_degree: int | None = None) -> None:
        while self.heap:
            deg = self.heap[0][0]
            if max_degree is not None and deg > max_degree:
                return
            _, _, i, j = heapq.heappop(self.heap)
            if (i, j) not in self.pending:
                continue
            self.pending.discard((i, j))
            pi, pj = self.plus[i], self.plus[j]
            lcm = tuple(a if a > b else b for a, b in zip(pi, pj))
            if self._chain_skip(i, j, lcm):
                continue
            # S-pair of two binomials is again a binomial (sides may share factors)
            left = tuple(l - a + b for l, a, b in zip(lcm, pi, self.minus[i]))
            right = tuple(l - a + b for l, a, b in zip(lcm, pj, self.minus[j]))
            if left != right:
                self._add_sides(left, right)

    # -- reduced basis ------------------------------------------------------

    def reduced_elements(self) -> list[Binomial]:
        """Minimal, fully interreduced, deterministically sorted elements."""
        idx = list(range(len(self.plus)))
        keep = []
        for i in idx:
            pi = self.plus[i]
            dominated = False
            for j in idx:
                if j == i:
                    continue
                pj = self.plus[j]
                if pj == pi:
                    dominated = j < i
                elif all(a <= b for a, b in zip(pj, pi)):
                    dominated = True
                if dominated:
                    break
            if not dominated:
                keep.append(i)
        plus = [self.plus[i] for i in keep]
        minus = [self.minus[i] for i in keep]
        masks = [self.masks[i] for i in keep]
        changed = True
        while changed:
            changed = False
            for a in range(len(keep)):
                mono = minus[a]
                while True:
                    mm = self._mask(mono)
                    hit = None
                    for b in range(len(keep)):
                        if b == a or masks[b] & ~mm:
                            continue
                        if all(l <= m for l, m in zip(plus[b], mono)):
                            hit = b
                            break
                    if hit is None:
                        break
                    mono = tuple(m - l + t for m, l, t in zip(mono, plus[hit], minus[hit]))
                    changed = True
                minus[a] = mono
        out = []
        for p, m in zip(plus, minus):
            if any(a and b for a, b in zip(p, m)):
                raise NonSaturatedIdeal(
                    f"reduced basis element y^{p} - y^{m} has a common factor")
            out.append(Binomial.from_sides(p, m))
        out.sort(key=lambda b: self.key(b.plus()))
        return out


def buchberger(gens, order: MonomialOrder, grading=None,
               max_basis: int = 20000) -> GroebnerBasis:
    """Reduced Groebner basis of the binomial ideal generated by ``gens``.
    Generators must be homogeneous for the (default: standard) grading."""
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        return GroebnerBasis(order, (), True)
    nvars = len(gens[0].u)
    engine = BuchbergerEngine(nvars, order, grading=grading, max_basis=max_basis)
    for g in gens:
        engine.add(g)
    engine.complete()
    return GroebnerBasis(order, tuple(engine.reduced_elements()), True)


def reduce_binomial(b: Binomial, gb: GroebnerBasis, grading=None) -> Binomial | None:
    """Normal form of b modulo a (Groebner) basis; None when it reduces to zero."""
    nvars = len(b.u)
    engine = BuchbergerEngine(nvars, gb.order, grading=grading)
    for g in gb.elements:
        engine.add(g, reduce_first=False)
    return engine.normal_form(b)


# ---------------------------------------------------------------------------
# toric ideals by elimination


def toric_ideal(config, max_basis: int = 20000) -> list[Binomial]:
    """Generators of the toric ideal of a homogenized point configuration,
    computed by eliminating {x_1..x_n, t} from the binomials y_i - X^{a_i} t
    under a block order with graded-reverse-lex inside each block.

    The returned list is the reduced Groebner basis of the ideal in the
    y-variables under graded-reverse-lex in the configuration's point order.
    """
    pts = config.hpoints()
    m = len(pts)
    n = len(pts[0]) - 1 if pts else config.dim
    nvars = n + 1 + m
    order = MonomialOrder(kind="graded-reverse-lex", elim=n + 1)
    grading = (0,) * n + (1,) * (m + 1)
    # the presentation ideal is prime, so stripping common monomial factors is sound
    engine = BuchbergerEngine(nvars, order, grading=grading, max_basis=max_basis,
                              saturate=True)
    for i, pt in enumerate(pts):
        u = [0] * nvars
        for j in range(n):
            u[j] = -pt[j]
        u[n] = -pt[n]  # exponent of t (the homogenizing 1)
        u[n + 1 + i] = 1
        engine.add(Binomial(tuple(u)))
    engine.complete()
    out = []
    for b in engine.reduced_elements():
        if any(b.u[: n + 1]):
            continue
        out.append(Binomial(tuple(b.u[n + 1:])))
    return out


def ideal_equal(a, b, order: MonomialOrder | None = None) -> bool:
    """True iff the two binomial generating sets generate the same ideal.
    A generating set whose reduced basis escapes the pure-difference vector
    representation cannot equal a toric-style vector ideal, so that case
    reports False rather than raising."""
    a = [f for f in a if not f.is_zero]
    b = [f for f in b if not f.is_zero]
    if not a and not b:
        return True
    nvars = len((a or b)[0].u)
    order = order or MonomialOrder()
    try:
        gb_b = buchberger(b, order)
        if any(reduce_binomial(f, gb_b) is not None for f in a):
            return False
        gb_a = buchberger(a, order)
        return all(reduce_binomial(f, gb_a) is None for f in b)
    except NonSaturatedIdeal:
        return False


def minimal_generators(gens, order: MonomialOrder | None = None):
    """Greedy minimal homogeneous generating set, processed in increasing
    degree; returns (kept, mu) with mu = 0 for the zero ideal.  The degree
    multiset of the kept set (hence mu) is order-independent."""
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        return [], 0
    nvars = len(gens[0].u)
    order = order or MonomialOrder()
    engine = BuchbergerEngine(nvars, order)
    for g in gens:
        engine.check_homogeneous(g)
    key = order.key_function(nvars)
    kept = []
    for g in sorted(gens, key=lambda f: (f.degree(), key(f.plus()), f.u)):
        engine.complete(max_degree=g.degree())
        if engine.normal_form(g) is None:
            continue
        kept.append(g)
        engine.add(g)
    mu = max((g.degree() for g in kept), default=0)
    return kept, mu


def initial_ideal(gb: GroebnerBasis):
    """(minimal monomial generators, squarefree flag, max degree) of in(I)."""
    if not gb.reduced:
        raise ValueError("initial_ideal needs a reduced basis")
    monos = [b.plus() for b in gb.elements]
    squarefree = all(all(e <= 1 for e in m) for m in monos)
    maxdeg = max((sum(m) for m in monos), default=0)
    return monos, squarefree, maxdeg


# ---------------------------------------------------------------------------
# quadratic Groebner basis search


def _deterministic_perms(gens, nvars: int):
    totals = [0] * nvars
    for g in gens:
        for i, x in enumerate(g.u):
            totals[i] += abs(x)
    ident = tuple(range(nvars))
    by_desc = tuple(sorted(range(nvars), key=lambda i: (-totals[i], i)))
    by_asc = tuple(sorted(range(nvars), key=lambda i: (totals[i], i)))
    seen = []
    for p in (ident, tuple(reversed(ident)), by_desc, by_asc):
        if p not in seen:
            seen.append(p)
    return seen


def quadratic_gb_search(gens, budget: int = 50, seed: int = 0,
                        max_basis: int = 20000):
    """Look for a monomial order whose reduced basis has maximum degree <= 2.
    Deterministic orders are tried before ``budget`` seeded random permutations;
    returns ('found', order) or ('unknown', None) -- never a nonexistence claim."""
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        return "found", MonomialOrder()
    nvars = len(gens[0].u)
    candidates = []
    for perm in _deterministic_perms(gens, nvars):
        for kind in ("graded-reverse-lex", "lex"):
            candidates.append(MonomialOrder(kind=kind, perm=perm))
    rng = random.Random(seed)
    for _ in range(budget):
        perm = tuple(rng.sample(range(nvars), nvars))
        for kind in ("graded-reverse-lex", "lex"):
            candidates.append(MonomialOrder(kind=kind, perm=perm))
    for order in candidates:
        try:
            gb = buchberger(gens, order, max_basis=max_basis)
        except BasisSizeExceeded:
            continue
        if gb.max_degree() <= 2:
            return "found", order
    return "unknown", None
