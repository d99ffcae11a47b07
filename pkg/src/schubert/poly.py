"""
Sparse multivariate polynomials with exact integer coefficients, the
symmetric-function constructors used by the Schubert machinery, and normal
forms modulo the ideal generated by the elementary symmetric polynomials
e_1, ..., e_n.

Monomials are exponent tuples with trailing zeros trimmed, so the same
polynomial compares equal no matter the ambient number of variables.
Coefficients are Python ints, hence arbitrary precision: overflow cannot
occur, let alone wrap silently.

One monomial comparison is shared by every consumer (reduction, Schubert
basis extraction, term ordering in serialized output): compare exponents
from the highest-indexed variable downward, see :func:`monomial_key`.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from itertools import combinations, combinations_with_replacement
from typing import Iterator

Exponents = tuple[int, ...]


def trim(exps: Iterable[int]) -> Exponents:
    """Canonical monomial key: drop trailing zeros."""
    e = tuple(exps)
    while e and e[-1] == 0:
        e = e[:-1]
    if any(a < 0 for a in e):
        raise ValueError(f"negative exponent in {e}")
    return e


def monomial_key(exps: Exponents, nvars: int) -> tuple[int, ...]:
    """
    The pinned comparison key: exponents read from x_nvars down to x_1.
    Bigger key means bigger monomial.
    """
    e = exps + (0,) * (nvars - len(exps))
    return tuple(reversed(e))


def staircase_exponent(n: int) -> Exponents:
    """delta = (n-1, n-2, ..., 1, 0), trimmed."""
    return trim(range(n - 1, -1, -1))


def divides_staircase(exps: Exponents, n: int) -> bool:
    """True iff the monomial divides x^delta, i.e. exp_i <= n - i."""
    return len(exps) <= n and all(a <= n - i - 1 for i, a in enumerate(exps))


class Poly:
    """
    Immutable sparse polynomial: a mapping from trimmed exponent tuples to
    nonzero integer coefficients.  Supports +, -, * (with ints or Polys)
    and integer powers; all arithmetic is exact.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Iterable[int], int] | None = None):
        canon: dict[Exponents, int] = {}
        if terms:
            for exps, coef in terms.items():
                if coef == 0:
                    continue
                m = trim(exps)
                c = canon.get(m, 0) + coef
                if c:
                    canon[m] = c
                elif m in canon:
                    del canon[m]
        self._terms = canon

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def one(cls) -> "Poly":
        return cls({(): 1})

    @classmethod
    def constant(cls, c: int) -> "Poly":
        return cls({(): c})

    @classmethod
    def variable(cls, i: int) -> "Poly":
        """x_i, 1-indexed."""
        if i < 1:
            raise ValueError("variables are 1-indexed")
        return cls({(0,) * (i - 1) + (1,): 1})

    @classmethod
    def monomial(cls, exps: Iterable[int], coef: int = 1) -> "Poly":
        return cls({tuple(exps): coef})

    def items(self) -> Iterator[tuple[Exponents, int]]:
        return iter(self._terms.items())

    def sorted_terms(self, nvars: int | None = None) -> list[tuple[Exponents, int]]:
        """Terms ascending in the pinned order."""
        n = nvars if nvars is not None else self.nvars()
        return sorted(self._terms.items(), key=lambda mc: monomial_key(mc[0], n))

    def coefficient(self, exps: Iterable[int]) -> int:
        """The coefficient of a monomial, 0 if absent."""
        return self._terms.get(trim(exps), 0)

    def nvars(self) -> int:
        """Smallest k with all monomials in x_1..x_k."""
        return max((len(m) for m in self._terms), default=0)

    def total_degree(self) -> int:
        return max((sum(m) for m in self._terms), default=0)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient_sum(self) -> int:
        """Evaluation at x_1 = x_2 = ... = 1."""
        return sum(self._terms.values())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({} if other == 0 else {(): other})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> "Poly":
        p = Poly()
        p._terms = {m: -c for m, c in self._terms.items()}
        return p

    def __add__(self, other: "Poly | int") -> "Poly":
        other = _coerce(other)
        res = dict(self._terms)
        for m, c in other._terms.items():
            s = res.get(m, 0) + c
            if s:
                res[m] = s
            elif m in res:
                del res[m]
        p = Poly()
        p._terms = res
        return p

    __radd__ = __add__

    def __sub__(self, other: "Poly | int") -> "Poly":
        return self + (-_coerce(other))

    def __rsub__(self, other: "Poly | int") -> "Poly":
        return _coerce(other) + (-self)

    def __mul__(self, other: "Poly | int") -> "Poly":
        if isinstance(other, int):
            p = Poly()
            if other:
                p._terms = {m: c * other for m, c in self._terms.items()}
            return p
        if not isinstance(other, Poly):
            return NotImplemented
        res: dict[Exponents, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                a, b = (m1, m2) if len(m1) >= len(m2) else (m2, m1)
                m = trim(tuple(x + y for x, y in zip(a, b)) + a[len(b):])
                s = res.get(m, 0) + c1 * c2
                if s:
                    res[m] = s
                elif m in res:
                    del res[m]
        p = Poly()
        p._terms = res
        return p

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = Poly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __repr__(self) -> str:
        return f"Poly({poly_to_text(self)})"


def _coerce(x: "Poly | int") -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, int):
        return Poly.constant(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to Poly")


def elementary(i: int, n: int) -> Poly:
    """The elementary symmetric polynomial e_i(x_1, ..., x_n)."""
    if not 1 <= i <= n:
        raise ValueError(f"need 1 <= i <= n, got i={i}, n={n}")
    terms: dict[Exponents, int] = {}
    for combo in combinations(range(n), i):
        e = [0] * (combo[-1] + 1)
        for j in combo:
            e[j] = 1
        terms[tuple(e)] = 1
    return Poly(terms)


def complete_h(a: int, k: int) -> Poly:
    """The complete homogeneous symmetric polynomial h_a(x_1, ..., x_k)."""
    if a < 0 or k < 1:
        raise ValueError(f"need a >= 0 and k >= 1, got a={a}, k={k}")
    terms: dict[Exponents, int] = {}
    for combo in combinations_with_replacement(range(k), a):
        e = [0] * k
        for j in combo:
            e[j] += 1
        terms[trim(e)] = 1
    return Poly(terms)


def h_alpha(alpha: Iterable[int], n: int) -> Poly:
    """
    The product h_alpha = h_{alpha_1}(x_1) h_{alpha_2}(x_1, x_2) ...
    h_{alpha_{n-1}}(x_1, ..., x_{n-1}).  The composition must have n - 1
    parts and satisfy alpha_i <= n - i.
    """
    alpha = tuple(alpha)
    if len(alpha) != n - 1:
        raise ValueError(f"composition needs {n - 1} parts, got {len(alpha)}")
    for i, a in enumerate(alpha):
        if a < 0 or a > n - i - 1:
            raise ValueError(f"part alpha_{i + 1}={a} outside 0..{n - i - 1}")
    out = Poly.one()
    for i, a in enumerate(alpha):
        if a:
            out = out * complete_h(a, i + 1)
    return out


def _reduction_basis(n: int) -> list[tuple[int, Poly]]:
    """
    For i = n..1 the rewrite x_i^{n-i+1} == -(h_{n-i+1}(x_1..x_i) minus its
    lead term).  The lead terms are pairwise coprime pure powers, so the
    basis is Groebner and remainders are exactly the monomials dividing
    x^delta.
    """
    basis = []
    for i in range(n, 0, -1):
        g = complete_h(n - i + 1, i)
        lead = (0,) * (i - 1) + (n - i + 1,)
        tail = g - Poly.monomial(lead)
        basis.append((i, -tail))
    return basis


_BASIS_CACHE: dict[int, list[tuple[int, Poly]]] = {}


def normal_form(p: Poly, n: int) -> Poly:
    """
    The unique representative of p modulo <e_1, ..., e_n> supported on
    monomials dividing x^delta.  Linear and idempotent.
    """
    if p.nvars() > n:
        raise ValueError(f"polynomial uses more than {n} variables")
    if n not in _BASIS_CACHE:
        _BASIS_CACHE[n] = _reduction_basis(n)
    basis = _BASIS_CACHE[n]

    work = dict(p.items())
    done: dict[Exponents, int] = {}
    while work:
        m = max(work, key=lambda mm: monomial_key(mm, n))
        c = work.pop(m)
        for i, repl in basis:
            power = m[i - 1] if i <= len(m) else 0
            if power >= n - i + 1:
                rest = list(m)
                rest[i - 1] = power - (n - i + 1)
                for rm, rc in (Poly.monomial(rest, c) * repl).items():
                    s = work.get(rm, 0) + rc
                    if s:
                        work[rm] = s
                    elif rm in work:
                        del work[rm]
                break
        else:
            done[m] = c
    return Poly(done)


# --- serialization ---------------------------------------------------------

_TERM_RE = re.compile(r"^(?:(\d+)\*?)?((?:x\d+(?:\^\d+)?(?:\*x\d+(?:\^\d+)?)*))?$")


def poly_to_text(p: Poly, nvars: int | None = None) -> str:
    """Render like "x1^2*x2 + x1*x2^2", terms ascending in the pinned order."""
    if p.is_zero():
        return "0"
    parts = []
    for m, c in p.sorted_terms(nvars):
        factors = [
            f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}"
            for i, e in enumerate(m)
            if e
        ]
        body = "*".join(factors)
        if not body:
            term = str(abs(c))
        elif abs(c) == 1:
            term = body
        else:
            term = f"{abs(c)}*{body}"
        parts.append((c < 0, term))
    out = ("-" if parts[0][0] else "") + parts[0][1]
    for neg, term in parts[1:]:
        out += (" - " if neg else " + ") + term
    return out


def poly_from_text(s: str) -> Poly:
    """Parse the textual form emitted by :func:`poly_to_text`."""
    s = s.strip()
    if s == "0":
        return Poly.zero()
    chunks = re.split(r"\s*([+-])\s*", s)
    if chunks[0] == "":
        chunks = chunks[1:]
    else:
        chunks = ["+"] + chunks
    if len(chunks) % 2:
        raise ValueError(f"malformed polynomial text: {s!r}")
    total = Poly.zero()
    for sign, term in zip(chunks[::2], chunks[1::2]):
        m = _TERM_RE.match(term.strip())
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"malformed term: {term!r}")
        coef = int(m.group(1)) if m.group(1) else 1
        if sign == "-":
            coef = -coef
        exps: dict[int, int] = {}
        if m.group(2):
            for factor in m.group(2).split("*"):
                var, _, pow_ = factor.partition("^")
                i = int(var[1:])
                exps[i] = exps.get(i, 0) + (int(pow_) if pow_ else 1)
        width = max(exps, default=0)
        total = total + Poly.monomial(
            tuple(exps.get(i, 0) for i in range(1, width + 1)), coef
        )
    return total


def poly_to_json_obj(p: Poly, nvars: int | None = None) -> list[dict]:
    """JSON form: [{"exp": [a1, ..., an], "coef": c}, ...], pinned order."""
    n = nvars if nvars is not None else p.nvars()
    return [
        {"exp": list(m) + [0] * (n - len(m)), "coef": c}
        for m, c in p.sorted_terms(n)
    ]


def poly_from_json_obj(obj: list[dict]) -> Poly:
    total = Poly.zero()
    for entry in obj:
        total = total + Poly.monomial(tuple(entry["exp"]), int(entry["coef"]))
    return total
