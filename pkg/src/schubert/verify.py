"""
Self-verification suites: each one exercises a cross-cutting identity over a
whole symmetric group (or a seeded sample) and reports what it checked.
These back the ``verify`` CLI subcommand.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass, field

from .calc import (
    expand_in_schubert_basis,
    pieri,
    psi_alpha,
    psi_alpha_normal_form,
    schubert,
    skew,
    skew_expansion,
)
from .chains import chain_monomial, increasing_chains_to_w0, type_counts
from .perms import Perm, all_perms, bruhat_leq, length, longest, perm_to_str
from .poly import Poly, complete_h, normal_form
from .rcgraphs import chain_of_rcgraph, enumerate_rcgraphs, monomial, rcgraph_of_chain

SUITES = ("bijection", "routes", "corollary", "pieri", "stability")


@dataclass
class Report:
    suite: str
    n: int
    seed: int
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def note(self, ok: bool, message: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(message)


def run_suite(suite: str, n: int = 4, seed: int = 0) -> Report:
    if suite == "bijection":
        return suite_bijection(n, seed)
    if suite == "routes":
        return suite_routes(n, seed)
    if suite == "corollary":
        return suite_corollary(n, seed)
    if suite == "pieri":
        return suite_pieri(n, seed)
    if suite == "stability":
        return suite_stability(n, seed)
    raise ValueError(f"unknown suite {suite!r}")


def suite_bijection(n: int, seed: int = 0) -> Report:
    """Chains to w0 and rc-graphs are inverse bijections exchanging weights."""
    rep = Report("bijection", n, seed)
    delta = tuple(range(n - 1, -1, -1))
    for w in all_perms(n):
        graphs = list(enumerate_rcgraphs(w))
        chains = list(increasing_chains_to_w0(w))
        rep.note(len(graphs) == len(chains),
                 f"{perm_to_str(w)}: {len(graphs)} graphs vs {len(chains)} chains")
        rep.note(len(set(g.crossings for g in graphs)) == len(graphs),
                 f"{perm_to_str(w)}: duplicate rc-graphs")
        for graph in graphs:
            chain = chain_of_rcgraph(graph)
            back = rcgraph_of_chain(chain)
            rep.note(back == graph, f"{perm_to_str(w)}: round trip failed")
            total = tuple(
                a + b for a, b in zip(
                    monomial(graph) + (0,), chain_monomial(chain) + (0,)
                )
            )
            rep.note(total == delta,
                     f"{perm_to_str(w)}: x^R * x^gamma != x^delta")
        for chain in chains:
            graph = rcgraph_of_chain(chain)
            rep.note(chain_of_rcgraph(graph) == chain,
                     f"{perm_to_str(w)}: chain round trip failed")
    return rep


def suite_routes(n: int, seed: int = 0, samples: int = 100) -> Report:
    """The three skew routes agree; exhaustive for n <= 4, sampled above."""
    rep = Report("routes", n, seed)
    if n <= 4:
        pairs = [
            (u, w)
            for u in all_perms(n)
            for w in all_perms(n)
            if bruhat_leq(u, w)
        ]
    else:
        rng = random.Random(seed)
        perms = list(all_perms(n))
        pairs = []
        while len(pairs) < samples:
            u = rng.choice(perms)
            w = rng.choice(perms)
            if bruhat_leq(u, w):
                pairs.append((u, w))
    for u, w in pairs:
        a = skew(w, u, n, method="normalform")
        b = skew(w, u, n, method="chains")
        c = skew(w, u, n, method="lr")
        rep.note(a == b and b == c,
                 f"skew({perm_to_str(w)}/{perm_to_str(u)}) routes disagree")
    return rep


def suite_corollary(n: int, seed: int = 0) -> Report:
    """I_alpha(u, w) == sum_v c^w_{u,v} I_alpha(w0 v, w0), all types at once."""
    rep = Report("corollary", n, seed)
    w0 = longest(n)
    to_w0: dict[Perm, Counter] = {}
    for u in all_perms(n):
        for w in all_perms(n):
            if not bruhat_leq(u, w):
                continue
            lhs = type_counts(u, w)
            rhs: Counter = Counter()
            for z, c in skew_expansion(w, u, n).terms.items():
                if z not in to_w0:
                    to_w0[z] = type_counts(z, w0)
                for alpha, cnt in to_w0[z].items():
                    rhs[alpha] += c * cnt
            rep.note(lhs == rhs,
                     f"type counts differ for ({perm_to_str(u)}, {perm_to_str(w)})")
    return rep


def suite_pieri(n: int, seed: int = 0, max_a: int = 3, max_k: int = 3) -> Report:
    """Chain-route Pieri equals the polynomial route; psi matches both reads."""
    rep = Report("pieri", n, seed)
    for u in all_perms(n):
        for k in range(1, min(max_k, n - 1) + 1):
            for a in range(0, max_a + 1):
                via_chains = pieri(u, a, k, n)
                product = normal_form(schubert(u, n) * complete_h(a, k), n)
                via_poly = expand_in_schubert_basis(product, n)
                rep.note(via_chains == via_poly,
                         f"pieri({perm_to_str(u)}, a={a}, k={k}) mismatch")
    exp_one = {w: expand_in_schubert_basis(schubert(w, n), n) for w in all_perms(n)}
    for w, f in exp_one.items():
        for alpha in _staircase_compositions(n):
            lhs = psi_alpha(f, alpha, n)
            rhs = psi_alpha_normal_form(f, alpha, n)
            rep.note(lhs == rhs,
                     f"psi_{alpha}(S_{perm_to_str(w)}): {lhs} != {rhs}")
    return rep


def _staircase_compositions(n: int):
    """All alpha with 0 <= alpha_i <= n - i."""
    def rec(i):
        if i == n:
            yield ()
            return
        for a in range(n - i + 1):
            for rest in rec(i + 1):
                yield (a,) + rest
    return rec(1)


def suite_stability(n: int, seed: int = 0) -> Report:
    """
    Skew polynomials for pairs in S_3, embedded into each S_m up to n + 1,
    satisfy skew_{m+1} == skew_m * x_1 ... x_m.
    """
    rep = Report("stability", n, seed)
    base = 3
    pairs = [
        (u, w)
        for u in all_perms(base)
        for w in all_perms(base)
        if bruhat_leq(u, w)
    ]
    for m in range(base, n + 1):
        shift = Poly.monomial((1,) * m)
        for u, w in pairs:
            small = skew(w, u, m)
            big = skew(w, u, m + 1)
            rep.note(small * shift == big,
                     f"stability fails for ({perm_to_str(u)}, {perm_to_str(w)}) at {m}")
    return rep


def measure_enumeration(w: Perm, repeats: int = 3) -> dict:
    """
    Time the full chain enumeration for w.  Returns n, the number of steps
    per chain l, the chain count c, the best wall time, and the unit cost
    time / (n * l * c).
    """
    n = len(w)
    l = n * (n - 1) // 2 - length(w)
    c = 0
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        c = sum(1 for _ in increasing_chains_to_w0(w))
        best = min(best, time.perf_counter() - t0)
    unit = best / (n * l * c) if l and c else float("nan")
    return {"w": w, "n": n, "l": l, "c": c, "time": best, "unit": unit}
