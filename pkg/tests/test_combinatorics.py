import pytest

from exactla import circuit as cc
from exactla.combinatorics import (Graph, SetFamily, binom, binom_table,
                                   clique_number, fisher_check,
                                   graham_pollak_check, grolmusz_graph,
                                   independence_number, lincoeff,
                                   oddtown_check, or_poly_mod_pe, ramsey_check,
                                   rcw_verify, subset_rank, subset_unrank,
                                   subsets_up_to)
from exactla.errors import (InvalidInput, NotLIntersecting,
                            PreconditionViolated)
from exactla.field import QQ


def test_binom():
    assert binom(5, 0) == 1
    assert binom(4, 2) == 6
    assert binom(3, 5) == 0
    assert binom(3, -1) == 0
    assert binom_table(4, 2)[4] == [1, 4, 6]


def test_subset_ranking_bijective():
    subsets = subsets_up_to(3, 1)
    assert [subset_rank(3, S, 1) for S in subsets] == [1, 2, 3, 4]
    assert subset_rank(5, frozenset(), 2) == 1
    total = sum(binom(5, i) for i in range(3))
    for x in range(1, total + 1):
        assert subset_rank(5, subset_unrank(5, x, 2), 2) == x


def test_lincoeff_multilinear():
    x1, x2 = cc.var("x1"), cc.var("x2")
    coeffs = lincoeff(x1 * x2 + x1, QQ, ["x1", "x2"])
    assert coeffs[frozenset({1, 2})] == 1
    assert coeffs[frozenset({1})] == 1
    # squaring collapses on 0/1 inputs: x^2 has the same table as x
    sq = lincoeff(x1 * x1, QQ, ["x1", "x2"])
    assert sq[frozenset({1})] == 1 and frozenset({1, 2}) not in sq


def test_rcw_triangle():
    fam = SetFamily(3, [{1, 2}, {2, 3}, {1, 3}])
    report = rcw_verify(fam, [1])
    assert report["m"] == 3 and report["bound"] == 4
    assert report["bound_holds"] and report["upper_triangular"]


def test_rcw_sunflower_of_singletons():
    fam = SetFamily(4, [{1}, {2}, {3}, {4}])
    report = rcw_verify(fam, [0])
    assert report["diag_nonzero"] and report["bound_holds"]


def test_rcw_single_set_empty_l():
    report = rcw_verify(SetFamily(3, [{1, 2}]), [])
    assert report["m"] == 1 and report["bound"] == 1


def test_rcw_rejects_bad_intersections():
    fam = SetFamily(4, [{1, 2}, {2, 3}, {3, 4}])
    with pytest.raises(NotLIntersecting):
        rcw_verify(fam, [0])  # {1,2} and {2,3} share one element


def test_oddtown_singletons():
    fam = SetFamily(5, [{i} for i in range(1, 6)])
    report = oddtown_check(fam)
    assert report["m"] == 5 and report["gf2_rank"] == 5


def test_oddtown_rejections():
    with pytest.raises(PreconditionViolated):
        oddtown_check(SetFamily(4, [{1, 2}]))  # even size
    with pytest.raises(PreconditionViolated):
        oddtown_check(SetFamily(4, [{1, 2, 3}, {3}]))  # odd intersection


def test_fisher_degenerate_rejected():
    fam = SetFamily(3, [{1, 2, 3}, {1, 2, 3}])
    with pytest.raises(PreconditionViolated):
        fisher_check(fam, 3)  # |A_i| > lambda fails


def test_fisher_accepts():
    fam = SetFamily(4, [{1, 2}, {1, 3}, {1, 4}])
    report = fisher_check(fam, 1)
    assert report["bound_holds"] and report["gram_det"] != 0


def test_graham_pollak_two_stars():
    report = graham_pollak_check(3, [({1}, {2, 3}), ({2}, {3})])
    assert report["count"] == 2 and report["bound_holds"]


def test_graham_pollak_rejects_cover_errors():
    with pytest.raises(PreconditionViolated):
        graham_pollak_check(3, [({1}, {2, 3})])  # edge {2,3} missing
    with pytest.raises(PreconditionViolated):
        graham_pollak_check(3, [({1}, {2, 3}), ({2}, {1, 3})])  # {1,2} twice


def test_or_poly_parity():
    spec = or_poly_mod_pe(2, 2, 1)
    assert spec.coeffs == (0, 1)  # f = s_1
    assert spec.eval_count(0) == 0 and spec.eval_count(1) == 1


def test_or_poly_mod_four():
    spec = or_poly_mod_pe(4, 2, 2)
    for j in range(10):
        assert (spec.eval_count(j) == 0) == (j % 4 == 0)


def test_or_poly_mod_three():
    spec = or_poly_mod_pe(3, 3, 1)
    assert spec.eval_count(0) == 0
    assert spec.eval_count(1) == spec.eval_count(2) != 0


def test_or_poly_guards():
    with pytest.raises(InvalidInput):
        or_poly_mod_pe(100, 2, 1)  # q^2 < k
    with pytest.raises(InvalidInput):
        or_poly_mod_pe(4, 2, 5)  # q > 16


def test_grolmusz_k2():
    built = grolmusz_graph(2)
    assert built["n"] == 4 and built["edge_rule"] == "odd"
    G = built["graph"]
    for i in range(G.n):
        assert not G.rows[i][i]
    report = ramsey_check(G, built["rank2"], built["rank3"])
    assert report["bounds_hold"]
    assert report["clique"] <= built["rank2"] + 1
    assert report["independence"] <= binom(built["rank3"] + 1, 2) + 1


def test_grolmusz_k3_capped():
    built = grolmusz_graph(3, cap=27)
    assert built["n"] == 27
    assert ramsey_check(built["graph"], built["rank2"], built["rank3"])["bounds_hold"]


def test_clique_extremes():
    empty = Graph([[0] * 4 for _ in range(4)])
    assert clique_number(empty) == 1
    assert independence_number(empty) == 4
    complete = empty.complement()
    assert clique_number(complete) == 4
    assert independence_number(complete) == 1
    assert ramsey_check(empty, 3, 3)["clique"] == 1
