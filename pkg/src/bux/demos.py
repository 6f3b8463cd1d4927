"""The demo pipelines behind ``bux demo``: each returns printable claims."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from importlib import resources

from .budget import Budget
from .coloring import chromatic_number
from .complex import complete_graph, cycle_graph, grotzsch_graph, path_graph, petersen_graph
from .gf2 import to_bits
from .goodpairs import verify_complete_join_additivity
from .invariants import (
    gamma_q_universal,
    is_q_regular_real,
    log_bound,
    r_bounds,
    r_real,
    spread_coloring,
    verify_counterexample,
)

SPREAD_CASES = ((1, 2), (1, 3), (2, 4), (2, 6), (3, 6))
JOIN_CASES = ((2, 2), (2, 3), (3, 3), (3, 4), (4, 4))


@dataclass
class DemoResult:
    name: str
    lines: list = field(default_factory=list)
    claims: list = field(default_factory=list)

    @property
    def ok(self):
        return all(ok for _, ok in self.claims)

    def claim(self, text, ok):
        self.claims.append((text, bool(ok)))

    def render(self):
        out = [f"== {self.name} =="] + self.lines
        out += [f"[{'PASS' if ok else 'FAIL'}] {text}" for text, ok in self.claims]
        return "\n".join(out)


def data_path(*parts):
    return resources.files("bux").joinpath("data", *parts)


def golden_counterexample():
    from .io import load_certificate

    with resources.as_file(data_path("certificates", "counterexample_gf2.json")) as p:
        return load_certificate(p).char_map()


def graph_suite():
    suite = [(f"P{n}", path_graph(n)) for n in (2, 3, 4, 5)]
    suite += [(f"C{n}", cycle_graph(n)) for n in range(3, 8)]
    suite += [(f"K{n}", complete_graph(n)) for n in range(2, 9)]
    suite += [("Petersen", petersen_graph()), ("Grotzsch", grotzsch_graph())]
    return suite


def demo_counterexample(budget=None, search=False):
    res = DemoResult("counterexample: K4 * Grotzsch, r_R and r not additive")
    t0 = time.perf_counter()
    rep = verify_counterexample(budget, None if search else golden_counterexample())
    dt = time.perf_counter() - t0
    res.lines.append(f"r_R(K4) = {rep.r_real_k4}, r(K4) = {rep.r_k4}")
    res.lines.append(f"r_R(Grotzsch) = {rep.r_real_grotzsch}, r(Grotzsch) = {rep.r_grotzsch}")
    res.lines.append(f"lower bound r_R(Grotzsch) + dim K4 + 1 = {rep.lower}")
    res.lines.append(f"certificate ({rep.source}) at l = {rep.gf2.l}: "
                     + " ".join(to_bits(v, rep.gf2.l) for v in rep.gf2.images))
    res.lines.append(f"r_R = r = {rep.r_join} < {rep.r_real_k4 + rep.r_real_grotzsch}"
                     f" (gap {rep.gap}), {dt:.2f}s")
    for text, ok in rep.claims:
        res.claim(text, ok)
    return res


def demo_graph_formula(budget=None):
    res = DemoResult("graph formula: r_R = r = ceil(log2(gamma + 1))")
    res.lines.append(f"{'graph':<10}{'gamma':>6}{'formula':>8}{'r_R':>5}{'r':>4}")
    for name, G in graph_suite():
        g = chromatic_number(G, budget)
        f = log_bound(g)
        rr = r_real(G, budget)
        rb = r_bounds(G, budget)
        r = rb.lower if rb.exact else f"{rb.lower}..{rb.upper}"
        res.lines.append(f"{name:<10}{g:>6}{f:>8}{rr:>5}{r!s:>4}")
        res.claim(f"{name}: r_R = r = {f}", rr == f and rb.exact and rb.lower == f)
    return res


def demo_join_additivity(budget=None):
    res = DemoResult("complete graphs: r_R(K_p * K_q) = r_R(K_p) + r_R(K_q)")
    for p, q in JOIN_CASES:
        rep = verify_complete_join_additivity(p, q, Budget.coerce(budget))
        res.lines.append(
            f"K{p} * K{q}: witness at l = {rep.level}, none at l = {rep.level - 1}"
            f" ({rep.nodes} nodes, {rep.seconds:.2f}s)"
        )
        res.claim(f"r_R(K{p} * K{q}) = {rep.r_p} + {rep.r_q}", rep.ok)
    return res


def demo_spreads(budget=None):
    res = DemoResult("q-regular colorings: gamma_q(RU_l) = (2^l - 1)/(2^q - 1) for q | l")
    for q, l in SPREAD_CASES:
        lower, exact = gamma_q_universal(l, q)
        sc = spread_coloring(l, q)
        classes = sc.classes
        sizes = {len(c) for c in classes}
        regular = is_q_regular_real(l, sc.colors, q)
        res.lines.append(
            f"q={q} l={l}: lower {lower}, spread uses {len(classes)} classes of size {sorted(sizes)}"
        )
        res.claim(f"gamma_{q}(RU_{l}) = {exact}", regular and len(classes) == lower == exact)
    return res


DEMOS = {
    "counterexample": demo_counterexample,
    "graph-formula": demo_graph_formula,
    "join-additivity": demo_join_additivity,
    "spreads": demo_spreads,
}
