from math import factorial

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oddspringer.skew import SkewPoly, format_monomial, monomials_of_degree, parse_poly
from oddspringer.operators import T
from oddspringer.symmetric import odd_partial_elementary
from oddspringer.springer import (
    Partition,
    QuotientError,
    b_operator,
    even_mod2_dimensions,
    graded_rank,
    hecke_action_matrix,
    hecke_module_check,
    height_membership,
    ideal_certificate,
    ideal_contains,
    ideal_graded_span,
    ideal_invariance_check,
    normal_form,
    ob_basis,
    partitions_of,
    poly_row,
    quotient,
    quotient_rank_profile,
    surjection_check,
    tanisaki_generators,
    technical_lemma_check,
    unimodular_completion,
    verify_b_action,
)

TREE_ORDER_211 = ["1", "x2", "x3", "x2*x3", "x3^2", "x2*x3^2",
              "x4", "x2*x4", "x3*x4", "x4^2", "x2*x4^2", "x3*x4^2"]

SMALL = [lam for n in range(1, 5) for lam in partitions_of(n)]
UP_TO_5 = [lam for n in range(1, 6) for lam in partitions_of(n)]


def P(text):
    return Partition.parse(text)


def test_partition_parsing():
    assert P("2,1,1").parts == (2, 1, 1)
    assert P("2,1,1,0").parts == (2, 1, 1)
    for bad in ("1,2", "a", "", "-1"):
        with pytest.raises(ValueError):
            P(bad)


def test_conjugate_examples():
    assert P("2,1,1").conjugate() == P("3,1")
    assert P("4").conjugate() == P("1,1,1,1")
    assert P("1,1,1").conjugate() == P("3")


def test_delta_examples():
    lam = P("2,1,1")
    assert lam.delta_k(3) == 1
    assert lam.delta_k(4) == 4
    for k in range(1, 6):
        assert P("5").delta_k(k) == k
    # the conjugate of (1,1) is (2), so its single smallest part is 0
    assert P("1,1").delta_k(1) == 0


def test_generator_windows():
    gens = set(tanisaki_generators("1,1"))
    assert gens == {(1, (1, 2)), (2, (1, 2))}
    assert set(tanisaki_generators("3")) == {(r, S) for r, S in tanisaki_generators("3") if r >= 1}
    assert len(tanisaki_generators("3")) == sum(k * len(list(__import__("itertools").combinations(range(3), k)))
                                                for k in range(1, 4))
    by_k = {}
    for r, S in tanisaki_generators("2,1,1"):
        by_k.setdefault(len(S), set()).add(r)
    assert by_k == {3: {3}, 4: {1, 2, 3, 4}}


def test_ideal_span_examples():
    # only x1 - x2 (from the full set) lives in degree one
    assert ideal_graded_span("1,1", 1).rank == 1
    assert ideal_graded_span("2", 1).rank == 2
    assert ideal_graded_span("1,1", 0).rank == 0


def test_tree_order_211():
    assert [format_monomial(b) for b in ob_basis("2,1,1")] == TREE_ORDER_211


def test_basis_examples():
    for n in range(1, 6):
        assert ob_basis(str(n)) == [(0,) * n]
        assert graded_rank(str(n)) == {0: 1}
    assert ob_basis("1,1") == [(0, 0), (0, 1)]
    assert sum(graded_rank("2,1,1").values()) == 12
    assert sum(graded_rank("1,1,1").values()) == 6


@pytest.mark.parametrize("n", range(1, 7))
def test_basis_size_is_multinomial(n):
    for lam in partitions_of(n):
        assert len(ob_basis(lam)) == lam.multinomial()
        assert len(set(ob_basis(lam))) == lam.multinomial()


def test_normal_form_examples():
    assert normal_form(SkewPoly.var(4, 4) ** 3, "2,1,1") == {}
    for b in ob_basis("2,1,1"):
        assert normal_form(SkewPoly.monomial(b), "2,1,1") == {b: 1}
    # x1 = (x1 - x2) + x2 with x1 - x2 a generator
    assert normal_form(SkewPoly.var(1, 2), "1,1") == {(0, 1): 1}


def test_hecke_matrix_examples():
    assert hecke_action_matrix(1, "3", 0).tolist() == [[1]]
    assert hecke_action_matrix(2, "3", 0).tolist() == [[1]]
    # T1(x2) = x1, which is x2 in the quotient
    assert hecke_action_matrix(1, "1,1", 1).tolist() == [[1]]
    with pytest.raises(ValueError):
        hecke_action_matrix(4, "2,1,1", 1)


def test_module_relations_small():
    for lam in UP_TO_5:
        assert all(r.passed for r in hecke_module_check(lam)), lam


def test_b_operator_examples():
    e1 = odd_partial_elementary(1, (1,), 2)
    assert b_operator(1, e1) == SkewPoly.var(1, 2) - SkewPoly.var(2, 2)
    assert b_operator(1, odd_partial_elementary(1, (1, 2), 2)).is_zero()
    for n in range(2, 6):
        assert verify_b_action(n).passed


def test_ideal_invariance_examples():
    recs = ideal_invariance_check("2,1,1", 4, full_span=True)
    assert all(r.passed for r in recs)


@pytest.mark.parametrize("lam", SMALL, ids=str)
def test_engine_agrees_with_full_route(lam):
    Q = quotient(lam)
    for d in range(Q.top_degree + 2):
        span = ideal_graded_span(lam, d)
        assert span.ncols - span.rank == Q.rank_in_degree(d)
        assert unimodular_completion(lam, d)
        for M in monomials_of_degree(lam.n, d):
            p = SkewPoly.monomial(M)
            assert span.contains(poly_row(p - Q.reduce(p), d))


@pytest.mark.parametrize("lam", [P(t) for t in ("3,2", "3,1,1", "2,2,1", "2,1,1,1", "1,1,1,1,1")], ids=str)
def test_engine_rank_profile_n5(lam):
    profile = {d: c for d, c in quotient_rank_profile(lam).items() if c}
    assert profile == graded_rank(lam)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_left_multiples_of_generators_vanish(data):
    lam = data.draw(st.sampled_from(UP_TO_5))
    gens = tanisaki_generators(lam)
    if not gens:
        return
    r, S = data.draw(st.sampled_from(gens))
    n = lam.n
    m = tuple(data.draw(st.lists(st.integers(0, 2), min_size=n, max_size=n)))
    p = SkewPoly.monomial(m) * odd_partial_elementary(r, S, n)
    assert normal_form(p, lam) == {}


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_normal_form_is_linear_and_idempotent(data):
    lam = data.draw(st.sampled_from(UP_TO_5))
    n = lam.n
    mono = st.lists(st.integers(0, 3), min_size=n, max_size=n).map(tuple)
    p = SkewPoly(n, data.draw(st.dictionaries(mono, st.integers(-4, 4), max_size=4)))
    q = SkewPoly(n, data.draw(st.dictionaries(mono, st.integers(-4, 4), max_size=4)))
    Q = quotient(lam)
    assert Q.reduce(Q.reduce(p)) == Q.reduce(p)
    assert Q.reduce(p + q.scale(3)) == Q.reduce(p) + Q.reduce(q).scale(3)
    for i in range(1, n):
        # the Hecke action descends to the quotient
        assert Q.reduce(T(i, p)) == Q.reduce(T(i, Q.reduce(p)))


def test_even_oracle_examples():
    assert sum(even_mod2_dimensions("2,1,1").values()) == 12
    assert even_mod2_dimensions("2,1,1") == graded_rank("2,1,1")
    assert even_mod2_dimensions("4") == {0: 1}
    assert even_mod2_dimensions("1,1") == {0: 1, 1: 1}


def test_technical_lemma_examples():
    lhs = parse_poly("x3*x4", 4) * odd_partial_elementary(2, (3, 4), 4)
    assert normal_form(lhs, "2,1,1") == {}
    assert all(r.passed for r in technical_lemma_check("2,2", 1))
    recs = {r.relation_id: r for r in technical_lemma_check("2,1,1", 1)}
    assert recs["technical_lemma_2"].passed and recs["technical_lemma_2"].detail["instances"] > 0
    # (3,1,1) has an instance whose product does not vanish before reduction
    recs = {r.relation_id: r for r in technical_lemma_check("3,1,1", 1)}
    assert recs["technical_lemma_2"].passed and recs["technical_lemma_2"].detail["nontrivial"] > 0
    with pytest.raises(ValueError):
        technical_lemma_check("4", 1)
    with pytest.raises(ValueError):
        technical_lemma_check("2,2", 0)


def test_membership_and_surjection_small():
    for lam in UP_TO_5:
        assert height_membership(lam).passed
        assert surjection_check(lam).passed


# -- the (2,2,2) quotient ------------------------------------------------------

def test_222_quotient_has_torsion():
    lam = P("2,2,2")
    with pytest.raises(QuotientError):
        quotient(lam)
    profile = quotient_rank_profile(lam)
    assert [profile[d] for d in range(7)] == [1, 5, 14, 24, 22, 8, 1]
    assert [graded_rank(lam)[d] for d in range(7)] == [1, 5, 14, 24, 25, 16, 5]
    m = SkewPoly.monomial((0, 0, 1, 1, 1, 1))
    cert = ideal_certificate(m.scale(2), lam)
    assert cert is not None
    total = SkewPoly.zero(6)
    for term in cert:
        assert (term.r, term.subset) in set(tanisaki_generators(lam))
        total = total + term.value()
    assert total == m.scale(2)
    assert ideal_certificate(m, lam) is None
    assert not ideal_contains(m, lam)
    # the mod-2 picture is still the even one
    assert even_mod2_dimensions(lam) == graded_rank(lam)


def test_222_height_membership_still_holds():
    assert ideal_contains(SkewPoly.var(6, 6) ** 3, "2,2,2")


@pytest.mark.parametrize("lam", [l for l in partitions_of(6) if str(l) != "2,2,2"], ids=str)
def test_n6_engine_certifies(lam):
    Q = quotient(lam)
    assert sum(Q.rank_in_degree(d) for d in range(Q.top_degree + 1)) == lam.multinomial()
