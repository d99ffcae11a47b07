"""
Saturated labeled chains in the Bruhat order and the enumeration of
increasing chains.

A chain stores every permutation it visits, not just its label sequence: a
permutation can have two distinct covers carrying the same label (from 1324
both the swap of positions (1,2) and of (1,3) carry the label (1,1)), so
labels alone do not pin down the walk.  A chain is *increasing* when its
labels strictly increase in lexicographic order.

Two enumerators are provided.  The generic one walks all covers and works
between any pair of endpoints.  Chains ending at the longest permutation
admit a much better search: the branches below a node u all swap the same
position k, the minimal one with u(k) + k < n + 1, paired with every l > k
that yields a cover.  That tree has one leaf per chain and its depth equals
the number of steps, so the whole of Gamma(w, w0) costs O(n * l * c) where
l is the number of steps and c the number of chains.

Both enumerators keep all state on their own stack; independent traversals
can run concurrently.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Iterator

from .perms import (
    Label,
    Perm,
    bruhat_covers,
    labeled_edges,
    length,
    longest,
    perm_from_str,
    perm_to_str,
)

Composition = tuple[int, ...]


@dataclass(frozen=True)
class LabeledChain:
    """A saturated chain: perms[0] -> perms[1] -> ... with one label per step."""

    perms: tuple[Perm, ...]
    labels: tuple[Label, ...]

    def __post_init__(self):
        if len(self.perms) != len(self.labels) + 1:
            raise ValueError("need exactly one label per step")
        if not self.perms:
            raise ValueError("a chain has at least its start")

    @property
    def start(self) -> Perm:
        return self.perms[0]

    @property
    def end(self) -> Perm:
        return self.perms[-1]

    @property
    def n(self) -> int:
        return len(self.perms[0])

    def __len__(self) -> int:
        return len(self.labels)

    def is_increasing(self) -> bool:
        return all(a < b for a, b in zip(self.labels, self.labels[1:]))


def check_chain(chain: LabeledChain) -> None:
    """Raise ValueError unless every step is a labeled cover with its label."""
    for u, w, lab in zip(chain.perms, chain.perms[1:], chain.labels):
        if lab not in labeled_edges(u, w):
            raise ValueError(f"{lab} does not label the cover {u} -> {w}")


def chain_monomial(chain: LabeledChain) -> Composition:
    """
    The exponent vector of x^gamma: entry i counts the labels whose first
    coordinate is i.  Always n - 1 entries.
    """
    t = [0] * (chain.n - 1)
    for k, _ in chain.labels:
        t[k - 1] += 1
    return tuple(t)


def chain_type(chain: LabeledChain) -> Composition:
    """The type of the chain; the same data as chain_monomial."""
    return chain_monomial(chain)


def increasing_chains(u: Perm, w: Perm) -> Iterator[LabeledChain]:
    """
    Every increasing chain from u to w, each exactly once, in lexicographic
    order of the label sequence.  Empty when u is not below w; the single
    empty chain when u == w.
    """
    if len(u) != len(w):
        raise ValueError("size mismatch")
    target = length(w)

    def walk(p: Perm, plen: int, last: Label | None,
             perms: list[Perm], labels: list[Label]) -> Iterator[LabeledChain]:
        if plen == target:
            if p == w:
                yield LabeledChain(tuple(perms), tuple(labels))
            return
        steps = []
        for v, (i, j) in bruhat_covers(p):
            b = p[i - 1]
            for k in range(i, j):
                if last is None or (k, b) > last:
                    steps.append(((k, b), v))
        steps.sort()
        for lab, v in steps:
            perms.append(v)
            labels.append(lab)
            yield from walk(v, plen + 1, lab, perms, labels)
            perms.pop()
            labels.pop()

    start_len = length(u)
    if start_len > target:
        return
    yield from walk(u, start_len, None, [u], [])


def increasing_chains_to_w0(w: Perm) -> Iterator[LabeledChain]:
    """
    All of Gamma(w, w0) by the specialized tree search: branch at u over the
    covers swapping the minimal position k with u(k) + k < n + 1, ordered by
    the partner position l.
    """
    n = len(w)
    w0 = longest(n)

    def walk(u: Perm, perms: list[Perm], labels: list[Label]) -> Iterator[LabeledChain]:
        if u == w0:
            yield LabeledChain(tuple(perms), tuple(labels))
            return
        k = 0
        while u[k] + k + 1 > n:
            k += 1
        b = u[k]
        # valid partners l: u(l) > b and u(l) below every value seen in
        # between that itself exceeds b
        bound = n + 1
        for l in range(k + 1, n):
            ul = u[l]
            if b < ul < bound:
                v = list(u)
                v[k], v[l] = v[l], v[k]
                perms.append(tuple(v))
                labels.append((k + 1, b))
                yield from walk(perms[-1], perms, labels)
                perms.pop()
                labels.pop()
            if ul > b:
                bound = min(bound, ul)

    yield from walk(w, [w], [])


def count_by_type(u: Perm, w: Perm, alpha: Sequence[int]) -> int:
    """The number of increasing chains from u to w of the given type."""
    alpha = _padded_type(alpha, len(u))
    return sum(1 for c in increasing_chains(u, w) if chain_type(c) == alpha)


def type_counts(u: Perm, w: Perm) -> Counter:
    """Counter of chain types over all increasing chains from u to w."""
    return Counter(chain_type(c) for c in increasing_chains(u, w))


def _padded_type(alpha: Sequence[int], n: int) -> Composition:
    alpha = tuple(alpha)
    if len(alpha) > n - 1:
        if any(alpha[n - 1:]):
            return alpha  # can never match a real type; comparison just fails
        alpha = alpha[: n - 1]
    return alpha + (0,) * (n - 1 - len(alpha))


# --- serialization ---------------------------------------------------------

def chain_to_json_obj(chain: LabeledChain) -> dict:
    """{"start": "<perm>", "steps": [[k, b], ...]}"""
    return {
        "start": perm_to_str(chain.start),
        "steps": [[k, b] for k, b in chain.labels],
    }


def chain_from_json_obj(obj: dict, end: Perm | None = None) -> LabeledChain:
    """
    Rebuild a chain from its serialized form by searching for the walks that
    realize the whole label sequence.  A single step can be ambiguous (three
    covers of 1432 carry the label (1, 1)), but the full sequence usually
    pins the walk down; passing the known endpoint narrows the search
    further.  Raises ValueError when no walk fits or several still do.
    """
    start = perm_from_str(obj["start"])
    wanted = tuple((int(k), int(b)) for k, b in obj["steps"])

    walks: list[tuple[Perm, ...]] = []

    def extend(p: Perm, depth: int, acc: list[Perm]) -> None:
        if depth == len(wanted):
            if end is None or p == end:
                walks.append(tuple(acc))
            return
        lab = wanted[depth]
        for v, (i, j) in bruhat_covers(p):
            if i <= lab[0] < j and p[i - 1] == lab[1]:
                acc.append(v)
                extend(v, depth + 1, acc)
                acc.pop()

    extend(start, 0, [start])
    if not walks:
        raise ValueError(f"no chain from {start} realizes labels {wanted}")
    if len(walks) > 1:
        raise ValueError(
            f"labels {wanted} from {start} fit {len(walks)} distinct chains"
        )
    return LabeledChain(walks[0], wanted)
