"""Full-graph analysis reports: every graph-side criterion next to its
algebra-side oracle, serialized with stable field names for diffing."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import __version__
from .binomials import (BasisSizeExceeded, MonomialOrder, buchberger, initial_ideal,
                        minimal_generators, quadratic_gb_search, toric_ideal)
from .graphs import SimpleGraph, complement, induced_cycles, is_bipartite, is_chordal, is_perfect, \
    odd_cycle_condition, stability_number, stable_sets
from .polytopes import idp_check, is_unimodular, stable_set_polytope
from .theorems import (no_quadratic_gb_certificate, normality_necessary_audit,
                       normality_verdict_alpha2, quadratic_necessary_audit, two_hole_witness)

ORDER_ALIASES = {
    "lex": "lex",
    "deglex": "graded-lex",
    "graded-lex": "graded-lex",
    "grevlex": "graded-reverse-lex",
    "graded-reverse-lex": "graded-reverse-lex",
}


def parse_order(descriptor: str) -> MonomialOrder:
    """Parse 'kind' or 'kind:perm' with a 1-based comma-separated permutation."""
    parts = descriptor.split(":")
    kind = ORDER_ALIASES.get(parts[0].strip())
    if kind is None:
        raise ValueError(f"unknown order kind {parts[0]!r}")
    perm = None
    if len(parts) > 1 and parts[1].strip():
        perm = tuple(int(x) - 1 for x in parts[1].split(","))
    if len(parts) > 2:
        raise ValueError("order descriptor is 'kind' or 'kind:perm'")
    return MonomialOrder(kind=kind, perm=perm)


@dataclass(frozen=True)
class RunConfig:
    """Everything that determines an analysis run; identical configs (seed
    included) produce byte-identical reports."""

    input_path: str | None = None
    family_spec: str | None = None
    dmax: int | None = None
    walk_bound: int | None = None
    order: str = "grevlex"
    budget: int = 20
    seed: int = 0
    fmt: str = "json"
    out: str | None = None

    def __post_init__(self):
        if self.dmax is not None and self.dmax < 2:
            raise ValueError("dmax must be >= 2")
        if self.budget < 0:
            raise ValueError("budget must be >= 0")


def analyze_graph(g: SimpleGraph, dmax: int | None = None, order: str = "grevlex",
                  budget: int = 20, seed: int = 0, minor_guard: int = 10_000_000) -> dict:
    """Assemble the full analysis report for one graph."""
    gbar = complement(g)
    alpha = stability_number(g)
    perfect, perfect_cert = is_perfect(g)
    bip, _odd = is_bipartite(gbar)
    occ, occ_pair = odd_cycle_condition(gbar)
    config = stable_set_polytope(g)

    report: dict = {
        "version": f"stabletoric {__version__}",
        "graph": {"n": g.n, "m": g.m, "edges": [list(e) for e in g.sorted_edges()]},
        "alpha": alpha,
        "perfect": perfect,
        "chordal": is_chordal(g),
        "complement_bipartite": bip,
        "complement": {
            "bipartite": bip,
            "odd_holes": [list(c) for c in induced_cycles(gbar, 5, "odd")],
            "odd_antiholes": [list(c) for c in induced_cycles(g, 5, "odd")],
        },
        "odd_cycle_condition": occ,
    }

    uni = is_unimodular(config, guard=minor_guard)
    if uni.status == "infeasible":
        report["unimodular"] = "infeasible"
        report["unimodular_note"] = uni.note
    else:
        report["unimodular"] = uni.status == "unimodular"

    budget_d = dmax if dmax is not None else g.n + 1
    if alpha == 2:
        verdict, pair = normality_verdict_alpha2(g)
        report["normal"] = {
            "status": verdict,
            "dmax": None,
            "witness": list(two_hole_witness(g, pair)) if pair else None,
            "route": "odd-cycle-theorem",
            "violating_pair": [list(c) for c in pair] if pair else None,
        }
    else:
        v = idp_check(config, budget_d)
        report["normal"] = {
            "status": "normal-up-to-dmax" if v.status == "normal-up-to" else "nonnormal",
            "dmax": budget_d,
            "witness": list(v.witness) if v.witness else None,
            "route": "idp-oracle",
            "violating_pair": None,
        }

    mono_order = parse_order(order)
    try:
        gens = toric_ideal(config)
        kept, mu = minimal_generators(gens, mono_order)
        report["mu"] = mu
        report["generators"] = [b.render(config.labels) for b in kept]
        gb = buchberger(gens, mono_order)
        monos, squarefree, maxdeg = initial_ideal(gb)
        report["groebner"] = {
            "order": mono_order.describe(),
            "maxdeg": maxdeg,
            "squarefree": squarefree,
            "basis_size": len(gb),
        }
        cert_status, witness = no_quadratic_gb_certificate(g, budget_d)
        if cert_status == "certified":
            report["quadratic_gb"] = {"status": "certified-impossible", "order": None,
                                      "witness": list(witness)}
        else:
            status, found_order = quadratic_gb_search(gens, budget=budget, seed=seed)
            report["quadratic_gb"] = {
                "status": status,
                "order": found_order.describe() if found_order else None,
            }
    except BasisSizeExceeded as exc:
        for key in ("mu", "generators", "groebner", "quadratic_gb"):
            report[key] = {"status": "skipped", "reason": str(exc)} if key != "mu" else None
        report["skipped"] = str(exc)

    report["audits"] = [
        {"audit": v.audit, "kind": v.kind, "cycles": [list(c) for c in v.cycles],
         "bridges": [list(b) for b in v.bridges]}
        for v in normality_necessary_audit(g) + quadratic_necessary_audit(g)
    ]

    _check_consistency(report)
    return report


def _check_consistency(report: dict) -> None:
    if report["complement_bipartite"] and report["unimodular"] is not True:
        raise AssertionError("bipartite complement must imply a unimodular verdict")
    qgb = report.get("quadratic_gb")
    if isinstance(qgb, dict) and qgb.get("status") == "certified-impossible":
        if report["normal"]["status"] not in ("nonnormal",):
            raise AssertionError("certificate requires a non-normality witness")
        if qgb.get("witness") is None:
            raise AssertionError("certificate must carry its witness")


def render_report(report: dict, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = [f"stabletoric report ({report['version']})"]
    g = report["graph"]
    lines.append(f"graph: n={g['n']} m={g['m']}")
    lines.append(f"alpha={report['alpha']} perfect={report['perfect']} "
                 f"chordal={report['chordal']} complement_bipartite={report['complement_bipartite']}")
    lines.append(f"unimodular={report['unimodular']} odd_cycle_condition={report['odd_cycle_condition']}")
    n = report["normal"]
    lines.append(f"normal: {n['status']}" + (f" (dmax={n['dmax']})" if n["dmax"] else "")
                 + (f" witness={n['witness']}" if n["witness"] else ""))
    lines.append(f"mu={report.get('mu')}")
    for s in report.get("generators") or []:
        lines.append(f"  gen {s}")
    gb = report.get("groebner")
    if isinstance(gb, dict) and "maxdeg" in gb:
        lines.append(f"groebner: order=[{gb['order']}] maxdeg={gb['maxdeg']} "
                     f"squarefree={gb['squarefree']} size={gb['basis_size']}")
    q = report.get("quadratic_gb")
    if isinstance(q, dict):
        lines.append(f"quadratic_gb: {q.get('status')}"
                     + (f" order=[{q['order']}]" if q.get("order") else ""))
    for a in report["audits"]:
        lines.append(f"audit {a['audit']}/{a['kind']}: cycles={a['cycles']}")
    return "\n".join(lines) + "\n"
