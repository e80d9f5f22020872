"""Skew polynomial ring OPol_n: Z<x_1..x_n> modulo x_i x_j = -x_j x_i (i != j).

Monomials are exponent tuples ``(a_1, ..., a_n)`` standing for the ordered
product ``x_1^a_1 x_2^a_2 ... x_n^a_n``.  Every sign produced by reordering a
word of variables is computed in :func:`normalize` or :func:`mono_mul`; nothing
else in the package reorders variables.
"""
from __future__ import annotations

import re
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

Monomial = tuple[int, ...]


class SignedMonomial(NamedTuple):
    sign: int
    monomial: Monomial


def mono_degree(m: Monomial) -> int:
    return sum(m)


def unit(n: int) -> Monomial:
    return (0,) * n


def normalize(word: Sequence[int], n: int) -> SignedMonomial:
    """Bring a word of 1-based variable indices to ascending form.

    Each transposition of two *distinct* adjacent letters contributes a factor
    -1; equal letters commute, so the sign is (-1)^(inversions between
    distinct letters).
    """
    counts = [0] * n
    inversions = 0
    for idx in word:
        if not 1 <= idx <= n:
            raise ValueError(f"variable index {idx} out of range 1..{n}")
        # letters already seen with a strictly larger index
        inversions += sum(counts[idx:])
        counts[idx - 1] += 1
    return SignedMonomial(-1 if inversions & 1 else 1, tuple(counts))


def mono_mul(a: Monomial, b: Monomial) -> SignedMonomial:
    """Product of two canonical monomials, sign (-1)^(sum_{i>j} a_i b_j)."""
    parity = 0
    above = 0
    for k in range(len(a) - 1, -1, -1):
        parity += b[k] * above
        above += a[k]
    return SignedMonomial(-1 if parity & 1 else 1, tuple(x + y for x, y in zip(a, b)))


def mono_swap(i: int, m: Monomial) -> SignedMonomial:
    """Image of a monomial under the generator s_i of the signed S_n action."""
    ai, aj = m[i - 1], m[i]
    swapped = m[: i - 1] + (aj, ai) + m[i + 1 :]
    parity = sum(m) + ai * aj
    return SignedMonomial(-1 if parity & 1 else 1, swapped)


def monomials_of_degree(n: int, d: int) -> list[Monomial]:
    """All exponent vectors of total degree ``d``, lexicographically descending.

    >>> monomials_of_degree(2, 2)
    [(2, 0), (1, 1), (0, 2)]
    """
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for k in combo:
            e[k] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    assert len(out) == comb(d + n - 1, n - 1)
    return out


@lru_cache(maxsize=None)
def monomial_index(n: int, d: int) -> dict[Monomial, int]:
    return {m: k for k, m in enumerate(monomials_of_degree(n, d))}


def grlex_key(m: Monomial) -> tuple:
    return (sum(m), tuple(-e for e in m))


class SkewPoly:
    """An element of OPol_n with integer (or Fraction) coefficients.

    Instances are treated as immutable; arithmetic returns new objects.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Monomial, object] | None = None):
        if n < 1:
            raise ValueError("ambient variable count must be positive")
        self.n = n
        clean: dict[Monomial, object] = {}
        if terms:
            for m, c in terms.items():
                if len(m) != n:
                    raise ValueError(f"monomial {m} does not live in {n} variables")
                if c:
                    clean[tuple(m)] = c
        self.terms = clean

    # constructors
    @classmethod
    def zero(cls, n: int) -> SkewPoly:
        return cls(n)

    @classmethod
    def one(cls, n: int) -> SkewPoly:
        return cls(n, {unit(n): 1})

    @classmethod
    def var(cls, i: int, n: int) -> SkewPoly:
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
        e = [0] * n
        e[i - 1] = 1
        return cls(n, {tuple(e): 1})

    @classmethod
    def monomial(cls, m: Monomial, coeff=1) -> SkewPoly:
        return cls(len(m), {tuple(m): coeff})

    @classmethod
    def from_word(cls, word: Sequence[int], n: int, coeff=1) -> SkewPoly:
        sign, m = normalize(word, n)
        return cls(n, {m: sign * coeff})

    # queries
    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, SkewPoly):
            return self.n == other.n and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def degrees(self) -> set[int]:
        return {sum(m) for m in self.terms}

    def homogeneous_degree(self) -> int | None:
        """The common x-degree of all terms, or None if mixed (or zero)."""
        ds = self.degrees()
        return ds.pop() if len(ds) == 1 else None

    def homogeneous_part(self, d: int) -> SkewPoly:
        return SkewPoly(self.n, {m: c for m, c in self.terms.items() if sum(m) == d})

    def coefficient(self, m: Monomial):
        return self.terms.get(tuple(m), 0)

    def items(self) -> Iterator[tuple[Monomial, object]]:
        return iter(sorted(self.terms.items(), key=lambda t: grlex_key(t[0])))

    # arithmetic
    def _check(self, other: SkewPoly) -> None:
        if self.n != other.n:
            raise ValueError(f"ambient mismatch: {self.n} vs {other.n} variables")

    def __add__(self, other: SkewPoly) -> SkewPoly:
        if not isinstance(other, SkewPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return SkewPoly(self.n, out)

    def __neg__(self) -> SkewPoly:
        return SkewPoly(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: SkewPoly) -> SkewPoly:
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> SkewPoly:
        return SkewPoly(self.n, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other) -> SkewPoly:
        if not isinstance(other, SkewPoly):
            return self.scale(other)
        self._check(other)
        out: dict[Monomial, object] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                s, m = mono_mul(a, b)
                out[m] = out.get(m, 0) + s * ca * cb
        return SkewPoly(self.n, out)

    def __rmul__(self, c) -> SkewPoly:
        return self.scale(c)

    def __pow__(self, k: int) -> SkewPoly:
        out = SkewPoly.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __repr__(self) -> str:
        return f"SkewPoly({self.n}, {format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


def add(p: SkewPoly, q: SkewPoly) -> SkewPoly:
    return p + q


def mul(p: SkewPoly, q: SkewPoly) -> SkewPoly:
    return p * q


def linear_combination(n: int, pairs: Iterable[tuple[object, SkewPoly]]) -> SkewPoly:
    out: dict[Monomial, object] = {}
    for c, p in pairs:
        for m, v in p.terms.items():
            out[m] = out.get(m, 0) + c * v
    return SkewPoly(n, out)


def sn_action(i: int, p: SkewPoly) -> SkewPoly:
    """Ring endomorphism x_i -> -x_{i+1}, x_{i+1} -> -x_i, x_j -> -x_j."""
    if not 1 <= i <= p.n - 1:
        raise ValueError(f"generator index {i} out of range 1..{p.n - 1}")
    out = {}
    for m, c in p.terms.items():
        s, m2 = mono_swap(i, m)
        out[m2] = out.get(m2, 0) + s * c
    return SkewPoly(p.n, out)


# -- GF(2) reduction --------------------------------------------------------

def mod2_reduce(p: SkewPoly) -> frozenset[Monomial]:
    """Reduce coefficients mod 2; the result is the support of a commutative
    GF(2) polynomial (skew signs are units and disappear)."""
    return frozenset(m for m, c in p.terms.items() if c % 2)


def gf2_mul(f: frozenset[Monomial], g: frozenset[Monomial]) -> frozenset[Monomial]:
    acc: set[Monomial] = set()
    for a in f:
        for b in g:
            m = tuple(x + y for x, y in zip(a, b))
            acc ^= {m}
    return frozenset(acc)


# -- text format ------------------------------------------------------------

def format_monomial(m: Monomial) -> str:
    parts = []
    for k, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"x{k}")
        elif e > 1:
            parts.append(f"x{k}^{e}")
    return "*".join(parts) if parts else "1"


def format_poly(p: SkewPoly) -> str:
    if not p.terms:
        return "0"
    chunks = []
    for m, c in p.items():
        neg = c < 0
        mag = -c if neg else c
        body = format_monomial(m)
        if body == "1":
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if not chunks:
            chunks.append(("-" if neg else "") + text)
        else:
            chunks.append((" - " if neg else " + ") + text)
    return "".join(chunks)


_TERM_SPLIT = re.compile(r"\s*([+-])\s*")
_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_poly(text: str, n: int | None = None) -> SkewPoly:
    """Parse ``"x2*x1 - 3*x4^2"``.  Factors multiply in written order before
    normalization; a leading integer factor is the coefficient."""
    src = text.strip()
    if not src:
        raise ValueError("empty polynomial text")
    if src[0] not in "+-":
        src = "+" + src
    pieces = _TERM_SPLIT.split(src)
    # pieces: ['', sign, term, sign, term, ...]
    if pieces[0].strip():
        raise ValueError(f"cannot parse {text!r}")
    terms: list[tuple[int, list[int]]] = []
    top = 0
    for sign, body in zip(pieces[1::2], pieces[2::2]):
        body = body.strip()
        if not body:
            raise ValueError(f"dangling sign in {text!r}")
        coeff = 1 if sign == "+" else -1
        word: list[int] = []
        for tok in re.split(r"\s*\*\s*|\s+", body):
            if tok.isdigit():
                coeff *= int(tok)
                continue
            mt = _FACTOR.match(tok)
            if not mt:
                raise ValueError(f"bad factor {tok!r} in {text!r}")
            idx = int(mt.group(1))
            if idx < 1:
                raise ValueError(f"variable index must be >= 1, got {tok!r}")
            word.extend([idx] * int(mt.group(2) or 1))
            top = max(top, idx)
        terms.append((coeff, word))
    if n is None:
        n = max(top, 1)
    out: dict[Monomial, int] = {}
    for coeff, word in terms:
        s, m = normalize(word, n)
        out[m] = out.get(m, 0) + s * coeff
    return SkewPoly(n, out)
