"""Odd divided differences, isobaric and Hecke operators, odd Schubert polynomials.

Operator words are read as operator products: ``[("x", 1), ("d", 1)]`` is
x_1 * d_1, so d_1 acts first.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Callable, Sequence

from .report import CheckRecord, record
from .skew import (
    Monomial,
    SkewPoly,
    format_monomial,
    format_poly,
    mono_mul,
    mono_swap,
    monomials_of_degree,
    sn_action,
    unit,
)

Permutation = tuple[int, ...]
Operator = Callable[[SkewPoly], SkewPoly]


# -- divided differences ------------------------------------------------------

@lru_cache(maxsize=None)
def _dd_monomial(i: int, m: Monomial) -> tuple[tuple[Monomial, int], ...]:
    # split off the leftmost letter x_j: d(x_j f) = d(x_j) f + s_i(x_j) d(f)
    j = next((k for k, e in enumerate(m) if e), None)
    if j is None:
        return ()
    rest = m[:j] + (m[j] - 1,) + m[j + 1 :]
    out: dict[Monomial, int] = {}
    if j + 1 in (i, i + 1):
        out[rest] = 1
    if any(rest):
        # s_i(x_j) = -x_{sigma(j)}
        target = j + 1
        if target == i:
            target = i + 1
        elif target == i + 1:
            target = i
        e = [0] * len(m)
        e[target - 1] = 1
        e = tuple(e)
        for mm, c in _dd_monomial(i, rest):
            s, prod = mono_mul(e, mm)
            out[prod] = out.get(prod, 0) - s * c
    return tuple((k, v) for k, v in out.items() if v)


def _check_gen(i: int, n: int) -> None:
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range 1..{n - 1}")


def odd_divided_difference(i: int, p: SkewPoly) -> SkewPoly:
    _check_gen(i, p.n)
    out: dict[Monomial, object] = {}
    for m, c in p.terms.items():
        for mm, v in _dd_monomial(i, m):
            out[mm] = out.get(mm, 0) + c * v
    return SkewPoly(p.n, out)


def left_mul_var(j: int, p: SkewPoly) -> SkewPoly:
    if not 1 <= j <= p.n:
        raise ValueError(f"variable index {j} out of range 1..{p.n}")
    e = [0] * p.n
    e[j - 1] = 1
    e = tuple(e)
    out = {}
    for m, c in p.terms.items():
        s, mm = mono_mul(e, m)
        out[mm] = out.get(mm, 0) + s * c
    return SkewPoly(p.n, out)


def isobaric(i: int, p: SkewPoly) -> SkewPoly:
    """The 0-Hecke generator d_i x_i."""
    _check_gen(i, p.n)
    return odd_divided_difference(i, left_mul_var(i, p))


def hecke_operator(q, i: int, p: SkewPoly) -> SkewPoly:
    """A_i = d_i x_i - q x_i d_i (q-commutator form)."""
    _check_gen(i, p.n)
    first = odd_divided_difference(i, left_mul_var(i, p))
    second = left_mul_var(i, odd_divided_difference(i, p))
    return first - second.scale(q) if q else first


def hecke_operator_easy(q, i: int, p: SkewPoly) -> SkewPoly:
    """A_i = 1 - (q x_i + x_{i+1}) d_i, the rewritten form."""
    _check_gen(i, p.n)
    d = odd_divided_difference(i, p)
    corr = left_mul_var(i + 1, d)
    if q:
        corr = corr + left_mul_var(i, d).scale(q)
    return p - corr


def T(i: int, p: SkewPoly) -> SkewPoly:
    """Hecke generator at q = -1: 1 + (x_i - x_{i+1}) d_i."""
    d = odd_divided_difference(i, p)
    return p + left_mul_var(i, d) - left_mul_var(i + 1, d)


# -- operator words ---------------------------------------------------------

TOKENS = {"d", "x", "s", "A", "T", "ib"}


def token_operator(token: tuple, n: int, q=-1) -> Operator:
    """Return the operator for a single token: ("d", i) divided difference,
    ("x", j) left multiplication, ("s", i) signed transposition, ("A", i) the
    Hecke operator at parameter q, ("T", i) the q=-1 Hecke generator,
    ("ib", i) the isobaric operator."""
    kind, idx = token
    if kind not in TOKENS:
        raise ValueError(f"unknown operator token {kind!r}")
    bound = n if kind == "x" else n - 1
    if not 1 <= idx <= bound:
        raise ValueError(f"token {token} invalid for {n} variables")
    if kind == "d":
        return lambda p: odd_divided_difference(idx, p)
    if kind == "x":
        return lambda p: left_mul_var(idx, p)
    if kind == "s":
        return lambda p: sn_action(idx, p)
    if kind == "A":
        return lambda p: hecke_operator(q, idx, p)
    if kind == "T":
        return lambda p: T(idx, p)
    return lambda p: isobaric(idx, p)


def apply_word(word: Sequence[tuple], p: SkewPoly, q=-1) -> SkewPoly:
    ops = [token_operator(t, p.n, q) for t in word]
    for op in reversed(ops):
        p = op(p)
    return p


def divided_word(indices: Sequence[int]) -> list[tuple]:
    return [("d", i) for i in indices]


def hecke_word(indices: Sequence[int]) -> list[tuple]:
    return [("T", i) for i in indices]


# -- permutations -----------------------------------------------------------

def identity_perm(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def longest_perm(n: int) -> Permutation:
    return tuple(range(n, 0, -1))


def compose(u: Permutation, v: Permutation) -> Permutation:
    """(u v)(k) = u(v(k))."""
    return tuple(u[v[k] - 1] for k in range(len(v)))


def inverse(w: Permutation) -> Permutation:
    inv = [0] * len(w)
    for k, wk in enumerate(w, start=1):
        inv[wk - 1] = k
    return tuple(inv)


def length(w: Permutation) -> int:
    return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])


def simple_transposition(i: int, n: int) -> Permutation:
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def perm_from_word(word: Sequence[int], n: int) -> Permutation:
    w = identity_perm(n)
    for i in word:
        w = compose(w, simple_transposition(i, n))
    return w


def is_permutation(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def _w0_word(n: int) -> list[int]:
    # d_1 (d_2 d_1) ... (d_{n-1} ... d_1)
    word: list[int] = []
    for k in range(1, n):
        word.extend(range(k, 0, -1))
    return word


def canonical_reduced_word(w: Permutation) -> list[int]:
    """Deterministic reduced word: the fixed word 1,21,321,... for the longest
    element, otherwise the lexicographically smallest reduced word."""
    w = tuple(w)
    if not is_permutation(w):
        raise ValueError(f"{w} is not a permutation")
    n = len(w)
    if w == longest_perm(n):
        return _w0_word(n)
    word = []
    cur = w
    while True:
        pos = {v: k for k, v in enumerate(cur)}
        # smallest left descent: i+1 appears before i in one-line notation
        i = next((i for i in range(1, n) if pos[i + 1] < pos[i]), None)
        if i is None:
            break
        word.append(i)
        cur = compose(simple_transposition(i, n), cur)
    return word


def all_permutations(n: int) -> list[Permutation]:
    return [tuple(p) for p in permutations(range(1, n + 1))]


def delta_monomial(n: int) -> Monomial:
    return tuple(range(n - 1, -1, -1))


def odd_schubert(w: Permutation, n: int | None = None) -> SkewPoly:
    """s_w = d_{w^{-1} w_0}(x_1^{n-1} ... x_{n-1}), using the canonical word."""
    n = len(w) if n is None else n
    if len(w) != n or not is_permutation(w):
        raise ValueError(f"{w} is not a permutation of 1..{n}")
    u = compose(inverse(tuple(w)), longest_perm(n))
    word = canonical_reduced_word(u)
    return apply_word(divided_word(word), SkewPoly.monomial(delta_monomial(n)))


# -- operator identities ------------------------------------------------------

def basis_upto(n: int, dmax: int) -> list[Monomial]:
    return [m for d in range(dmax + 1) for m in monomials_of_degree(n, d)]


def operator_difference(lhs: Operator, rhs: Operator, n: int, dmax: int) -> str | None:
    """None when lhs and rhs agree on every monomial of degree <= dmax,
    otherwise a text counterexample."""
    for m in basis_upto(n, dmax):
        p = SkewPoly.monomial(m)
        a, b = lhs(p), rhs(p)
        if a != b:
            return f"on {format_monomial(m)}: {format_poly(a)} != {format_poly(b)}"
    return None


def word_op(word: Sequence[tuple], q=-1) -> Operator:
    return lambda p: apply_word(word, p, q)


def _sum_ops(*parts: tuple[object, Operator]) -> Operator:
    def op(p: SkewPoly) -> SkewPoly:
        out = SkewPoly.zero(p.n)
        for c, f in parts:
            out = out + f(p).scale(c)
        return out
    return op


_ID: Operator = lambda p: p
_ZERO: Operator = lambda p: SkewPoly.zero(p.n)


def verify_nilhecke_relations(n: int, dmax: int) -> list[CheckRecord]:
    if n < 2:
        raise ValueError("need n >= 2")
    out = []

    def check(rid: str, lhs: Operator, rhs: Operator) -> None:
        ce = operator_difference(lhs, rhs, n, dmax)
        out.append(record(rid, ce is None, n=n, dmax=dmax, counterexample=ce))

    for i in range(1, n):
        d = ("d", i)
        check(f"d{i}^2=0", word_op([d, d]), _ZERO)
        check(f"x{i}d{i}+d{i}x{i+1}=1",
              _sum_ops((1, word_op([("x", i), d])), (1, word_op([d, ("x", i + 1)]))), _ID)
        check(f"d{i}x{i}+x{i+1}d{i}=1",
              _sum_ops((1, word_op([d, ("x", i)])), (1, word_op([("x", i + 1), d]))), _ID)
        if i + 1 < n:
            check(f"d{i}d{i+1}d{i}=d{i+1}d{i}d{i+1}",
                  word_op(divided_word([i, i + 1, i])), word_op(divided_word([i + 1, i, i + 1])))
    for i in range(1, n):
        for j in range(i + 2, n):
            check(f"d{i}d{j}+d{j}d{i}=0",
                  _sum_ops((1, word_op(divided_word([i, j]))), (1, word_op(divided_word([j, i])))), _ZERO)
    for j in range(1, n):
        for i in range(1, n + 1):
            if abs(i - j) > 1:
                check(f"x{i}d{j}+d{j}x{i}=0",
                      _sum_ops((1, word_op([("x", i), ("d", j)])), (1, word_op([("d", j), ("x", i)]))), _ZERO)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            check(f"x{i}x{j}+x{j}x{i}=0",
                  _sum_ops((1, word_op([("x", i), ("x", j)])), (1, word_op([("x", j), ("x", i)]))), _ZERO)
    return out


def braid_defect_operator(q, i: int) -> Operator:
    """(2q + 2q^2) x_i x_{i+1} x_{i+2} d_i d_{i+1} d_i."""
    coeff = 2 * q + 2 * q * q
    word = [("x", i), ("x", i + 1), ("x", i + 2)] + divided_word([i, i + 1, i])
    return lambda p: apply_word(word, p).scale(coeff) if coeff else SkewPoly.zero(p.n)


def verify_hecke_relations(q, n: int, dmax: int) -> list[CheckRecord]:
    """Quadratic, far-commutation and braid relations for A_i(q).

    The braid record also carries ``defect_matches``: whether
    A_{i+1}A_iA_{i+1} - A_iA_{i+1}A_i equals the closed-form defect operator.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    q = Fraction(q)
    if q.denominator == 1:
        q = int(q)
    out = []

    def A(i: int) -> Operator:
        return lambda p: hecke_operator(q, i, p)

    for i in range(1, n):
        lhs = lambda p, i=i: A(i)(A(i)(p))
        rhs = lambda p, i=i: A(i)(p).scale(1 - q) + p.scale(q)
        ce = operator_difference(lhs, rhs, n, dmax)
        out.append(record(f"A{i}^2=(1-q)A{i}+q", ce is None, n=n, dmax=dmax, counterexample=ce,
                          detail={"q": str(q)}))
    for i in range(1, n):
        for j in range(i + 2, n):
            ce = operator_difference(lambda p: A(i)(A(j)(p)), lambda p: A(j)(A(i)(p)), n, dmax)
            out.append(record(f"A{i}A{j}=A{j}A{i}", ce is None, n=n, dmax=dmax, counterexample=ce,
                              detail={"q": str(q)}))
    for i in range(1, n - 1):
        lhs = lambda p, i=i: A(i + 1)(A(i)(A(i + 1)(p)))
        rhs = lambda p, i=i: A(i)(A(i + 1)(A(i)(p)))
        ce = operator_difference(lhs, rhs, n, dmax)
        defect = lambda p, i=i: lhs(p) - rhs(p)
        matches = operator_difference(defect, braid_defect_operator(q, i), n, dmax) is None
        out.append(record(f"A{i+1}A{i}A{i+1}=A{i}A{i+1}A{i}", ce is None, n=n, dmax=dmax,
                          counterexample=ce,
                          detail={"q": str(q), "defect_matches": matches,
                                  "defect_coefficient": str(2 * q + 2 * q * q)}))
    return out


def one(n: int) -> SkewPoly:
    return SkewPoly.monomial(unit(n))
