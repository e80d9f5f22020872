"""Odd elementary and odd partial symmetric functions, Hecke invariants and
maximal promotion."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .linalg import GradedSubspace, Row, clear_denominators, integer_kernel
from .operators import hecke_operator, odd_divided_difference
from .report import CheckRecord, record
from .skew import Monomial, SkewPoly, format_poly, monomial_index, monomials_of_degree, mono_mul

Subset = tuple[int, ...]


def check_subset(S: Sequence[int], n: int | None = None) -> Subset:
    S = tuple(S)
    if any(a >= b for a, b in zip(S, S[1:])):
        raise ValueError(f"ordered subset must be strictly ascending, got {list(S)}")
    if S and (S[0] < 1 or (n is not None and S[-1] > n)):
        raise ValueError(f"subset {list(S)} out of range")
    return S


def position(S: Subset, i: int) -> int:
    """1-based position of x_i in S."""
    return S.index(i) + 1


def odd_partial_elementary(r: int, S: Sequence[int], n: int) -> SkewPoly:
    """Elementary function of degree r in the signed variables
    x_i^S = (-1)^(S(i)-1) x_i, i in S."""
    S = check_subset(S, n)
    if r < 0 or r > len(S):
        return SkewPoly.zero(n)
    out = {}
    for picks in combinations(range(len(S)), r):
        e = [0] * n
        for k in picks:
            e[S[k] - 1] = 1
        sign = -1 if sum(picks) & 1 else 1  # positions are 0-based here
        out[tuple(e)] = sign
    return SkewPoly(n, out)


def odd_elementary(k: int, n: int) -> SkewPoly:
    return odd_partial_elementary(k, tuple(range(1, n + 1)), n)


def is_odd_symmetric(p: SkewPoly) -> bool:
    return all(odd_divided_difference(i, p).is_zero() for i in range(1, p.n))


# -- identity checks --------------------------------------------------------

def _subsets(universe: Sequence[int]):
    for k in range(len(universe) + 1):
        yield from combinations(universe, k)


def verify_split_identities(n: int, rmax: int) -> list[CheckRecord]:
    """Checks the two splitting identities and the promotion identity for every
    S inside {x_1..x_{n-1}} and 0 <= r <= rmax."""
    if n < 2:
        raise ValueError("need n >= 2")
    xn = SkewPoly.var(n, n)
    eps = lambda r, S: odd_partial_elementary(r, S, n)
    failures = {"split": None, "split_left": None, "promote": None}
    for S in _subsets(range(1, n)):
        k = len(S)
        Sn = S + (n,)
        for r in range(rmax + 1):
            lhs = eps(r, S)
            rhs1 = eps(r, Sn) + (eps(r - 1, S) * xn).scale((-1) ** (k - 1))
            rhs2 = eps(r, Sn) + (xn * eps(r - 1, S)).scale((-1) ** (k + r))
            promo_l = xn * eps(r, S)
            promo_r = (eps(r + 1, Sn) - eps(r + 1, S)).scale((-1) ** (k + r))
            tag = f"S={list(S)} r={r}"
            if lhs != rhs1 and failures["split"] is None:
                failures["split"] = f"{tag}: {format_poly(lhs)} != {format_poly(rhs1)}"
            if lhs != rhs2 and failures["split_left"] is None:
                failures["split_left"] = f"{tag}: {format_poly(lhs)} != {format_poly(rhs2)}"
            if promo_l != promo_r and failures["promote"] is None:
                failures["promote"] = f"{tag}: {format_poly(promo_l)} != {format_poly(promo_r)}"
    return [record(rid, ce is None, n=n, dmax=rmax, counterexample=ce) for rid, ce in failures.items()]


def verify_epsilon_relations(n: int, mmax: int) -> list[CheckRecord]:
    if n < 2:
        raise ValueError("need n >= 2")
    e = [odd_elementary(k, n) for k in range(n + 1)]
    out = []
    fam = {1: None, 2: None, 3: None}
    for m in range(1, mmax + 1):
        for i in range(1, n + 1):
            j = 2 * m - i
            if 1 <= j <= n and e[i] * e[j] != e[j] * e[i] and fam[1] is None:
                fam[1] = f"m={m} i={i}"
            j = 2 * m + 1 - i
            if i <= n - 1 and 1 <= 2 * m - i <= n - 1:
                sg = (-1) ** i
                lhs = e[i] * e[j] + (e[j] * e[i]).scale(sg)
                rhs = (e[i + 1] * e[2 * m - i]).scale(sg) + e[2 * m - i] * e[i + 1]
                if lhs != rhs and fam[2] is None:
                    fam[2] = f"m={m} i={i}: {format_poly(lhs)} != {format_poly(rhs)}"
        if 1 < 2 * m <= n - 1:
            lhs = e[1] * e[2 * m] + e[2 * m] * e[1]
            if lhs != e[2 * m + 1].scale(2) and fam[3] is None:
                fam[3] = f"m={m}"
    for k, ce in fam.items():
        out.append(record(f"epsilon_family_{k}", ce is None, n=n, dmax=mmax, counterexample=ce))
    if n >= 3:
        comm = e[1] * e[2] - e[2] * e[1]
        out.append(record("noncommutative_e1e2", not comm.is_zero(), n=n,
                          detail={"e1e2-e2e1": format_poly(comm)}))
    return out


# -- Hecke invariants -------------------------------------------------------

def poly_to_row(p: SkewPoly, d: int) -> Row:
    idx = monomial_index(p.n, d)
    return {idx[m]: c for m, c in p.terms.items()}


def invariant_subspace(n: int, d: int, q=-1) -> GradedSubspace:
    """Integer lattice of degree-d skew polynomials fixed by every A_i(q)."""
    q = Fraction(q)
    if q not in (-1, 0):
        raise ValueError("the Hecke action exists only for q in {-1, 0}")
    q = int(q)
    basis = monomials_of_degree(n, d)
    N = len(basis)
    # columns of (A_i - 1) in monomial coordinates, one block of rows per i
    rows: list[Row] = []
    for i in range(1, n):
        block: list[Row] = [dict() for _ in range(N)]
        for col, m in enumerate(basis):
            p = SkewPoly.monomial(m)
            img = hecke_operator(q, i, p) - p
            for r, c in poly_to_row(img, d).items():
                block[r][col] = c
        rows.extend(b for b in block if b)
    if n == 1 or not rows:
        return GradedSubspace.from_rows(n, d, N, [{k: 1} for k in range(N)])
    return GradedSubspace.from_rows(n, d, N, integer_kernel(rows, N))


def elementary_products(n: int, d: int) -> list[SkewPoly]:
    """All ordered products e_{c_1} ... e_{c_k} with parts 1..n summing to d."""
    e = [odd_elementary(k, n) for k in range(n + 1)]
    out = []

    def rec(rem: int, acc: SkewPoly) -> None:
        if rem == 0:
            out.append(acc)
            return
        for part in range(1, min(n, rem) + 1):
            rec(rem - part, acc * e[part])

    rec(d, SkewPoly.one(n))
    return out


def elementary_span(n: int, d: int) -> GradedSubspace:
    N = len(monomials_of_degree(n, d))
    return GradedSubspace.from_rows(n, d, N, [poly_to_row(p, d) for p in elementary_products(n, d)])


# -- maximal promotion --------------------------------------------------------

@dataclass(frozen=True)
class PromotionTerm:
    """coefficient * prefix * e_r^subset."""

    coefficient: int
    prefix: Monomial
    r: int
    subset: Subset

    def expand(self) -> SkewPoly:
        n = len(self.prefix)
        return SkewPoly.monomial(self.prefix, self.coefficient) * odd_partial_elementary(self.r, self.subset, n)

    def to_dict(self) -> dict:
        return {"coeff": self.coefficient, "prefix": list(self.prefix), "r": self.r, "S": list(self.subset)}


def expand_terms(terms: Sequence[PromotionTerm], n: int) -> SkewPoly:
    out = SkewPoly.zero(n)
    for t in terms:
        out = out + t.expand()
    return out


def _promote_power(coeff: int, a: int, j: int, r: int, S: Subset) -> list[tuple[int, int, int, Subset]]:
    """Expand x_j^a e_r^S (j > max S) as (coeff, leftover power, r', S')."""
    out = []
    c, rr = coeff, r
    for kappa in range(1, a + 1):
        # x_j e_rr^S = (-1)^(|S|+rr) (e_{rr+1}^{S+j} - e_{rr+1}^S)
        c = c * (-1) ** (len(S) + rr)
        rr += 1
        out.append((c, a - kappa, rr, S + (j,)))
        c = -c
    out.append((c, 0, rr, S))
    return out


def maximal_promotion(prefix: Monomial, r: int, S: Sequence[int], verify: bool = True) -> list[PromotionTerm]:
    """Rewrite prefix * e_r^S by promoting every variable of the prefix, in
    increasing index order, into the partial symmetric function.

    The expansion is compared against the input product unless ``verify`` is
    False; a mismatch raises ``ArithmeticError``.
    """
    n = len(prefix)
    S = check_subset(S, n)
    support = [k + 1 for k, e in enumerate(prefix) if e]
    if S and support and min(support) <= S[-1]:
        raise ValueError("prefix variables must lie strictly above max(S)")
    if r < 0:
        raise ValueError("r must be nonnegative")
    terms: list[tuple[int, list[int], int, Subset]] = [(1, list(prefix), r, S)]
    for j in support:
        nxt = []
        for coeff, expo, rr, SS in terms:
            a = expo[j - 1]
            right = sum(expo[j:])
            for c, left, r2, S2 in _promote_power(coeff, a, j, rr, SS):
                kappa = a - left
                e2 = list(expo)
                e2[j - 1] = left
                # x_j^a slides past the variables to its right and back
                sign = -1 if (kappa * right) & 1 else 1
                if r2 <= len(S2):
                    nxt.append((sign * c, e2, r2, S2))
        terms = nxt
    merged: dict[tuple, int] = {}
    for c, e, rr, SS in terms:
        key = (tuple(e), rr, SS)
        merged[key] = merged.get(key, 0) + c
    out = [PromotionTerm(c, m, rr, SS) for (m, rr, SS), c in merged.items() if c]
    out.sort(key=lambda t: (-sum(t.prefix), t.r, t.subset, t.prefix))
    if verify:
        lhs = SkewPoly.monomial(tuple(prefix)) * odd_partial_elementary(r, S, n)
        if expand_terms(out, n) != lhs:
            raise ArithmeticError(f"maximal promotion of {prefix}, r={r}, S={list(S)} does not re-expand")
    return out
