from fractions import Fraction
from math import gcd, lcm

import sympy
from sympy.matrices.normalforms import smith_normal_form
from hypothesis import given, settings, strategies as st

from oddspringer.linalg import (
    GradedSubspace,
    RationalEchelon,
    densify,
    gf2_rank,
    hermite_normal_form,
    integer_kernel,
    nullspace_rational,
    rational_rank,
    saturation,
)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=1, max_size=max_rows)
        .map(lambda rows: (c, rows)))


def as_rows(rows):
    return [{k: v for k, v in enumerate(r) if v} for r in rows]


def smith_index(M):
    snf = smith_normal_form(M, domain=sympy.ZZ)
    return sympy.prod([abs(snf[k, k]) for k in range(min(snf.shape)) if snf[k, k] != 0])


def in_lattice(v, basis):
    """v is an integer combination of the (independent) basis rows."""
    if not basis:
        return not any(v)
    B = sympy.Matrix(basis).T
    sol, params = B.gauss_jordan_solve(sympy.Matrix(v))
    return all(s.is_integer for s in sol)


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_hnf_generates_same_lattice(mc):
    ncols, rows = mc
    H = [densify(r, ncols) for r in hermite_normal_form(as_rows(rows))]
    A = sympy.Matrix(rows)
    assert len(H) == A.rank()
    for r in rows:
        assert in_lattice(r, H)
    if H:
        # equal covolume with the lattice spanned by the input rows
        # same index in the saturation: products of Smith invariants agree
        assert smith_index(A) == smith_index(sympy.Matrix(H))


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_hnf_shape(mc):
    ncols, rows = mc
    H = hermite_normal_form(as_rows(rows))
    pivots = [min(r) for r in H]
    assert pivots == sorted(set(pivots))
    for k, r in enumerate(H):
        c = pivots[k]
        assert r[c] > 0
        for other in H[:k]:
            assert 0 <= other.get(c, 0) < r[c]


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_integer_kernel(mc):
    ncols, rows = mc
    K = integer_kernel(as_rows(rows), ncols)
    A = sympy.Matrix(rows)
    assert len(K) == ncols - A.rank()
    for v in K:
        assert not any(A * sympy.Matrix(densify(v, ncols)))
    # saturated: every integral vector of the rational kernel is an integer combination
    dense = [densify(v, ncols) for v in K]
    for v in A.nullspace():
        den = lcm(*[int(sympy.fraction(x)[1]) for x in v])
        w = [int(x * den) for x in v]
        assert in_lattice(w, dense)
        g = 0
        for x in w:
            g = gcd(g, x)
        if g:
            assert in_lattice([x // g for x in w], dense)


def test_kernel_example():
    assert integer_kernel([{0: 2, 1: 4}], 2) == [{0: 2, 1: -1}]


def test_saturation_example():
    assert saturation([{0: 2, 1: 4}], 2) == [{0: 1, 1: 2}]
    sub = GradedSubspace.from_rows(1, 0, 2, [{0: 2, 1: 4}])
    assert not sub.is_saturated()
    assert sub.contains_rational({0: 1, 1: 2}) and not sub.contains({0: 1, 1: 2})


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rational_tools(mc):
    ncols, rows = mc
    A = sympy.Matrix(rows)
    assert rational_rank(as_rows(rows)) == A.rank()
    ns = nullspace_rational(as_rows(rows), ncols)
    assert len(ns) == ncols - A.rank()
    for v in ns:
        assert not any(A * sympy.Matrix([Fraction(x) for x in densify(v, ncols)]))
    ech = RationalEchelon()
    for r in as_rows(rows):
        ech.add(r)
    assert ech.rank == A.rank()


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(0, 63), max_size=7))
def test_gf2_rank_brute_force(masks):
    span = {0}
    for m in masks:
        span |= {s ^ m for s in span}
    assert 2 ** gf2_rank(masks) == len(span)


def test_gf2_rank_example():
    assert gf2_rank([3, 5, 6]) == 2
