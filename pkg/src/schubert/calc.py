"""
Schubert polynomials, skew Schubert polynomials by three routes, expansion
in the Schubert basis, Littlewood-Richardson coefficients, the Pieri rule
over labeled chains, and the chain-counting identity checker.

The three skew routes:

* ``normalform``: reduce S_u * S_{w0 w} modulo <e_1, ..., e_n>.
* ``chains``: sum x^delta / x^gamma over increasing chains from u to w.
* ``lr``: expand the normal form in the Schubert basis and rebuild the
  polynomial from the coefficients; the expansion indices z correspond to
  structure constants c^w_{u, w0 z}.

All agree exactly; the test suite exercises that on full symmetric groups.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from math import factorial
from typing import Iterator

from .chains import (
    chain_monomial,
    count_by_type,
    increasing_chains,
    increasing_chains_to_w0,
)
from .perms import (
    Perm,
    as_perm,
    bruhat_covers,
    bruhat_leq,
    compose,
    embed,
    longest,
    perm_from_code,
    perm_to_str,
)
from .poly import (
    Poly,
    divides_staircase,
    monomial_key,
    normal_form,
)
from .rcgraphs import enumerate_rcgraphs, monomial as rc_monomial
from .schur import schur_oracle  # re-exported: test support, public API

__all__ = [
    "SchubertExpansion",
    "schubert",
    "skew",
    "skew_expansion",
    "expand_in_schubert_basis",
    "lr_coefficients",
    "pieri",
    "psi_alpha",
    "psi_alpha_normal_form",
    "verify_corollary",
    "schur_oracle",
]


@dataclass(frozen=True, eq=True)
class SchubertExpansion:
    """An element of the cohomology ring written in the Schubert basis."""

    n: int
    terms: Mapping[Perm, int]

    def __post_init__(self):
        object.__setattr__(
            self, "terms", {w: c for w, c in self.terms.items() if c != 0}
        )
        for w in self.terms:
            if len(w) != self.n:
                raise ValueError(f"{w} does not lie in S_{self.n}")

    def __getitem__(self, w: Perm) -> int:
        return self.terms.get(tuple(w), 0)

    def __iter__(self) -> Iterator[tuple[Perm, int]]:
        return iter(sorted(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def as_poly(self) -> Poly:
        """Reassemble sum c_w * S_w."""
        total = Poly.zero()
        for w, c in self.terms.items():
            total = total + schubert(w, self.n) * c
        return total

    def to_json_obj(self) -> dict[str, int]:
        return {perm_to_str(w): c for w, c in sorted(self.terms.items(),
                                                     key=lambda wc: perm_to_str(wc[0]))}


# The cache is only ever written with fully computed values, so concurrent
# duplicate computation is harmless.
_SCHUBERT_CACHE: dict[tuple[Perm, int, str], Poly] = {}


def schubert(w: Sequence[int], n: int | None = None, method: str = "chain") -> Poly:
    """
    The Schubert polynomial of w, by either construction:

    * ``chain``: sum of x^delta / x^gamma over increasing chains w -> w0;
    * ``rcgraph``: sum of x^R over the rc-graphs of w.
    """
    w = as_perm(w)
    if n is None:
        n = len(w)
    w = embed(w, n)
    key = (w, n, method)
    cached = _SCHUBERT_CACHE.get(key)
    if cached is not None:
        return cached
    if method == "chain":
        delta = tuple(range(n - 1, -1, -1))
        terms: dict[tuple[int, ...], int] = {}
        for chain in increasing_chains_to_w0(w):
            t = chain_monomial(chain)
            m = _trimmed(tuple(d - a for d, a in zip(delta, t)))
            terms[m] = terms.get(m, 0) + 1
        result = Poly(terms)
    elif method == "rcgraph":
        terms = {}
        for graph in enumerate_rcgraphs(w):
            m = _trimmed(rc_monomial(graph))
            terms[m] = terms.get(m, 0) + 1
        result = Poly(terms)
    else:
        raise ValueError(f"unknown method {method!r}")
    _SCHUBERT_CACHE[key] = result
    return result


def _trimmed(e: tuple[int, ...]) -> tuple[int, ...]:
    while e and e[-1] == 0:
        e = e[:-1]
    return e


def skew(
    w: Sequence[int],
    u: Sequence[int],
    n: int | None = None,
    method: str = "normalform",
) -> Poly:
    """
    The skew Schubert polynomial of w over u, for u <= w in the Bruhat
    order.  Methods: ``normalform``, ``chains``, ``lr``; all agree.
    """
    w = as_perm(w)
    u = as_perm(u)
    if n is None:
        n = max(len(w), len(u))
    w = embed(w, n)
    u = embed(u, n)
    if not bruhat_leq(u, w):
        raise ValueError(
            f"{perm_to_str(u)} is not below {perm_to_str(w)} in the Bruhat order"
        )
    if method == "normalform":
        return normal_form(schubert(u, n) * schubert(compose(longest(n), w), n), n)
    if method == "chains":
        delta = tuple(range(n - 1, -1, -1))
        terms: dict[tuple[int, ...], int] = {}
        for chain in increasing_chains(u, w):
            t = chain_monomial(chain)
            m = _trimmed(tuple(d - a for d, a in zip(delta, t)))
            terms[m] = terms.get(m, 0) + 1
        return Poly(terms)
    if method == "lr":
        expansion = expand_in_schubert_basis(
            normal_form(schubert(u, n) * schubert(compose(longest(n), w), n), n), n
        )
        return expansion.as_poly()
    raise ValueError(f"unknown method {method!r}")


def expand_in_schubert_basis(p: Poly, n: int) -> SchubertExpansion:
    """
    Write p as an integer combination of Schubert polynomials of S_n.

    Extraction is triangular: the maximal monomial of S_w in the pinned
    order is x^code(w) with coefficient 1, so repeatedly matching the
    maximal remaining monomial against its code peels off one basis element
    at a time.  Raises ValueError when p is not in the span.
    """
    remaining = p
    out: dict[Perm, int] = {}
    rounds = 0
    limit = factorial(n) + 1
    while not remaining.is_zero():
        m = max((mm for mm, _ in remaining.items()),
                key=lambda mm: monomial_key(mm, n))
        if not divides_staircase(m, n):
            raise ValueError(
                f"monomial {m} does not divide the staircase; "
                f"polynomial is not in the Schubert span of S_{n}"
            )
        w = perm_from_code(m, n)
        c = remaining.coefficient(m)
        out[w] = c
        remaining = remaining - schubert(w, n) * c
        rounds += 1
        if rounds > limit:
            raise RuntimeError("extraction failed to terminate")
    return SchubertExpansion(n, out)


def lr_coefficients(
    u: Sequence[int], v: Sequence[int], n: int | None = None
) -> SchubertExpansion:
    """
    The map w -> c^w_{u,v} from S_u * S_v = sum c^w_{u,v} S_w, complete for
    the w lying in S_n.
    """
    u = as_perm(u)
    v = as_perm(v)
    if n is None:
        n = max(len(u), len(v))
    u = embed(u, n)
    v = embed(v, n)
    return expand_in_schubert_basis(normal_form(schubert(u, n) * schubert(v, n), n), n)


def pieri(u: Sequence[int], a: int, k: int, n: int | None = None) -> SchubertExpansion:
    """
    The expansion of S_u * h_a(x_1, ..., x_k): the multiset of endpoints of
    increasing chains from u of length a whose labels all have first
    coordinate k.
    """
    u = as_perm(u)
    if n is None:
        n = len(u)
    u = embed(u, n)
    if a < 0:
        raise ValueError("degree must be nonnegative")
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}")
    counts: dict[Perm, int] = {}

    def walk(p: Perm, steps: int, last_b: int) -> None:
        if steps == a:
            counts[p] = counts.get(p, 0) + 1
            return
        for v, (i, j) in bruhat_covers(p):
            if i <= k < j and p[i - 1] > last_b:
                walk(v, steps + 1, p[i - 1])

    walk(u, 0, 0)
    return SchubertExpansion(n, counts)


def psi_alpha(f: SchubertExpansion, alpha: Sequence[int], n: int) -> int:
    """
    The coefficient of the longest-permutation class in f * h_alpha,
    computed by iterating the Pieri rule over the parts of alpha.
    """
    alpha = tuple(alpha)
    if len(alpha) != n - 1:
        raise ValueError(f"composition needs {n - 1} parts, got {len(alpha)}")
    for i, a in enumerate(alpha):
        if a < 0 or a > n - i - 1:
            raise ValueError(f"part alpha_{i + 1}={a} outside 0..{n - i - 1}")
    current: dict[Perm, int] = dict(f.terms)
    for i, a in enumerate(alpha, start=1):
        if a == 0:
            continue
        nxt: dict[Perm, int] = {}
        for w, c in current.items():
            for z, m in pieri(w, a, i, n).terms.items():
                s = nxt.get(z, 0) + c * m
                if s:
                    nxt[z] = s
                elif z in nxt:
                    del nxt[z]
        current = nxt
    return current.get(longest(n), 0)


def psi_alpha_normal_form(f: SchubertExpansion, alpha: Sequence[int], n: int) -> int:
    """The same functional read off a normal form: coefficient of x^delta / x^alpha."""
    alpha = tuple(alpha)
    delta = tuple(range(n - 1, -1, -1))
    target = tuple(d - a for d, a in zip(delta, alpha + (0,) * (n - len(alpha))))
    if any(t < 0 for t in target):
        raise ValueError(f"{alpha} does not fit under the staircase")
    return normal_form(f.as_poly(), n).coefficient(target)


def skew_expansion(w: Perm, u: Perm, n: int) -> SchubertExpansion:
    """The Schubert expansion of the skew polynomial of w over u."""
    return expand_in_schubert_basis(skew(w, u, n, method="normalform"), n)


def verify_corollary(
    u: Sequence[int], w: Sequence[int], alpha: Sequence[int], n: int | None = None
) -> bool:
    """
    Check the chain-counting identity
    I_alpha(u, w) == sum_v c^w_{u,v} * I_alpha(w0 v, w0),
    with the structure constants read from the skew expansion.
    """
    u = as_perm(u)
    w = as_perm(w)
    if n is None:
        n = max(len(u), len(w))
    u = embed(u, n)
    w = embed(w, n)
    lhs = count_by_type(u, w, alpha)
    w0 = longest(n)
    # expansion indices z = w0 v, so w0 v runs over the indices directly
    rhs = sum(
        c * count_by_type(z, w0, alpha)
        for z, c in skew_expansion(w, u, n).terms.items()
    )
    return lhs == rhs
