"""
Permutations of {1, ..., n} in one-line notation, their statistics, and the
covers of the Bruhat order together with their edge labels.

A permutation is a plain tuple ``w`` with ``w[i-1] == w(i)`` (values are
1-indexed everywhere, matching the usual one-line notation such as 2413).
The Bruhat order is generated by covers ``u -> u*(i,j)`` where swapping the
entries in positions ``i < j`` raises the inversion count by exactly one.
Each cover carries ``j - i`` edge labels ``(k, b)`` with ``i <= k < j`` and
``b = u(i)``.
"""

from __future__ import annotations

from bisect import insort
from collections.abc import Sequence
from itertools import permutations as _itertools_permutations
from typing import Iterator

Perm = tuple[int, ...]
Label = tuple[int, int]


def is_permutation(seq: Sequence[int]) -> bool:
    """
    Check that seq is a rearrangement of 1..n.

    >>> is_permutation((2, 4, 1, 3))
    True
    >>> is_permutation((1, 1, 2))
    False
    """
    return sorted(seq) == list(range(1, len(seq) + 1))


def as_perm(seq: Sequence[int]) -> Perm:
    """Coerce to a validated permutation tuple."""
    w = tuple(seq)
    if not is_permutation(w):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w}")
    return w


def identity(n: int) -> Perm:
    """
    The identity permutation 1 2 ... n.

    >>> identity(3)
    (1, 2, 3)
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    return tuple(range(1, n + 1))


def longest(n: int) -> Perm:
    """
    The longest permutation n ... 2 1.

    >>> longest(4)
    (4, 3, 2, 1)
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    return tuple(range(n, 0, -1))


def length(w: Sequence[int]) -> int:
    """
    The number of inversions of w.

    >>> length((2, 1, 5, 4, 6, 3))
    5
    """
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def inverse(w: Perm) -> Perm:
    """
    >>> inverse((2, 4, 1, 3))
    (3, 1, 4, 2)
    """
    inv = [0] * len(w)
    for i, v in enumerate(w):
        inv[v - 1] = i + 1
    return tuple(inv)


def compose(u: Perm, v: Perm) -> Perm:
    """
    The product u*v, i.e. the map i -> u(v(i)).

    >>> compose((4, 3, 2, 1), (2, 4, 1, 3))
    (3, 1, 4, 2)
    """
    if len(u) != len(v):
        raise ValueError("size mismatch")
    return tuple(u[v[i] - 1] for i in range(len(v)))


def code(w: Perm) -> tuple[int, ...]:
    """
    The Lehmer code: c_i = #{j > i : w(j) < w(i)}.  Its sum is length(w).

    >>> code((2, 4, 1, 3))
    (1, 2, 0, 0)
    """
    n = len(w)
    return tuple(sum(1 for j in range(i + 1, n) if w[j] < w[i]) for i in range(n))


def perm_from_code(c: Sequence[int], n: int | None = None) -> Perm:
    """
    Invert the Lehmer code.  Requires c_i <= n - i; trailing zeros may be
    omitted when n is given explicitly.

    >>> perm_from_code((1, 2, 0, 0))
    (2, 4, 1, 3)
    """
    c = tuple(c)
    if n is None:
        n = len(c)
    if len(c) > n:
        raise ValueError("code longer than ambient size")
    c = c + (0,) * (n - len(c))
    for i, ci in enumerate(c):
        if ci < 0 or ci > n - i - 1:
            raise ValueError(f"code entry c_{i + 1}={ci} exceeds bound {n - i - 1}")
    avail = list(range(1, n + 1))
    return tuple(avail.pop(ci) for ci in c)


def bruhat_covers(u: Perm) -> list[tuple[Perm, tuple[int, int]]]:
    """
    All covers u -> w in the Bruhat order, each with the swapped position
    pair (i, j).  The swap (i, j) is a cover exactly when u(i) < u(j) and no
    position strictly between i and j holds a value strictly between u(i)
    and u(j).
    """
    n = len(u)
    out = []
    for i in range(n - 1):
        ui = u[i]
        for j in range(i + 1, n):
            if ui < u[j] and not any(ui < u[p] < u[j] for p in range(i + 1, j)):
                w = list(u)
                w[i], w[j] = w[j], w[i]
                out.append((tuple(w), (i + 1, j + 1)))
    return out


def cover_transposition(u: Perm, w: Perm) -> tuple[int, int]:
    """The positions (i, j) with w = u*(i,j), or raise if u -> w is no cover."""
    if len(u) != len(w):
        raise ValueError("size mismatch")
    diff = [p for p in range(len(u)) if u[p] != w[p]]
    if len(diff) != 2:
        raise ValueError(f"{u} -> {w} is not a cover")
    i, j = diff
    if (
        u[i] != w[j]
        or u[j] != w[i]
        or u[i] > u[j]
        or length(w) != length(u) + 1
    ):
        raise ValueError(f"{u} -> {w} is not a cover")
    return (i + 1, j + 1)


def labeled_edges(u: Perm, w: Perm) -> list[Label]:
    """
    The labels (k, b) of the cover u -> w: with w = u*(i,j) there are j - i
    edges, one for each k with i <= k < j, all carrying b = u(i) = w(j).

    >>> labeled_edges((1, 4, 3, 2), (4, 1, 3, 2))
    [(1, 1)]
    >>> labeled_edges((4, 1, 3, 2), (4, 2, 3, 1))
    [(2, 1), (3, 1)]
    """
    i, j = cover_transposition(u, w)
    b = u[i - 1]
    return [(k, b) for k in range(i, j)]


def bruhat_leq(u: Perm, w: Perm) -> bool:
    """
    Compare in the Bruhat order via sorted initial segments: u <= w iff for
    every k the sorted k-prefix of u is entrywise <= that of w.

    >>> bruhat_leq((1, 3, 2, 4), (2, 4, 1, 3))
    True
    >>> bruhat_leq((4, 3, 2, 1), (1, 2, 3, 4))
    False
    """
    if len(u) != len(w):
        raise ValueError("size mismatch")
    if u == w:
        return True
    pu: list[int] = []
    pw: list[int] = []
    for k in range(len(u) - 1):
        insort(pu, u[k])
        insort(pw, w[k])
        if any(a > b for a, b in zip(pu, pw)):
            return False
    return True


def embed(w: Perm, m: int) -> Perm:
    """
    Extend w by the fixed points n+1, ..., m.  Length is unchanged.

    >>> embed((1, 3, 2), 5)
    (1, 3, 2, 4, 5)
    """
    if m < len(w):
        raise ValueError(f"cannot embed size {len(w)} into smaller size {m}")
    return w + tuple(range(len(w) + 1, m + 1))


def all_perms(n: int) -> Iterator[Perm]:
    """All of S_n in lexicographic order."""
    return _itertools_permutations(range(1, n + 1))


def perm_to_str(w: Perm) -> str:
    """
    Serialize: digit string for n <= 9, comma-separated otherwise.

    >>> perm_to_str((2, 4, 1, 3))
    '2413'
    """
    if len(w) <= 9:
        return "".join(str(v) for v in w)
    return ",".join(str(v) for v in w)


def perm_from_str(s: str) -> Perm:
    """
    Parse either serialized form.

    >>> perm_from_str("2,1,5,4,6,3")
    (2, 1, 5, 4, 6, 3)
    >>> perm_from_str("215463")
    (2, 1, 5, 4, 6, 3)
    """
    s = s.strip()
    if not s:
        raise ValueError("empty permutation string")
    if "," in s:
        entries = tuple(int(part) for part in s.split(","))
    else:
        if not s.isdigit():
            raise ValueError(f"not a permutation string: {s!r}")
        entries = tuple(int(ch) for ch in s)
    return as_perm(entries)
