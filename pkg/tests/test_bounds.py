import math

import pytest

from gabounds.bounds import (
    CasselsError,
    CasselsInstance,
    Inapplicable,
    IsolatedVertexError,
    bound_abc,
    bound_basic,
    bound_degree_partition,
    bound_delta1,
    bound_forgotten,
    bound_gradient_minmax,
    bound_gradient_partition,
    bound_harmonic,
    bound_m2,
    bound_m2_h2,
    bound_m2_sharp,
    bound_mi,
    bound_order,
    bound_pendant,
    bound_variable_zagreb,
    cassels_check,
    evaluate_all,
    sort_key,
)
from gabounds.graph import build_graph, complete_graph, disjoint_union, path_graph

SQ2, SQ3, SQ6 = math.sqrt(2), math.sqrt(3), math.sqrt(6)
GA_P3 = 4 * SQ2 / 3
GA_K13 = 3 * SQ3 / 2
GA_K23 = 12 * SQ6 / 5

approx = lambda x: pytest.approx(x, rel=1e-12)  # noqa: E731


def test_basic(K4, P3, K23):
    ev = bound_basic(K4)
    assert ev.lower == approx(6) and ev.upper == 6 and ev.tight_lower and ev.tight_upper
    ev = bound_basic(P3)
    assert ev.lower == approx(GA_P3) and ev.tight_lower and ev.structural_lower
    assert ev.upper == 2 and not ev.tight_upper and ev.structural_upper is False
    ev = bound_basic(K23)
    assert ev.lower == approx(GA_K23) and ev.tight_lower


def test_basic_isolated_vertex():
    with pytest.raises(IsolatedVertexError):
        bound_basic(build_graph(3, [(0, 1)]))


def test_degree_partition_path(P3):
    ev = bound_degree_partition(P3, connected_variant=True)
    assert ev.upper == approx(GA_P3) and ev.tight_upper
    ev = bound_degree_partition(P3, connected_variant=False)
    assert ev.upper == approx(1 + GA_P3)
    assert ev.checks["first_form_le_second"]


def test_degree_partition_k23(K23):
    ev = bound_degree_partition(K23)
    # diag: min(3*2/2 - 1, C(3,2)) + min(2*3/2 - 1, C(2,2)) = 2 + 1
    assert ev.upper == approx(3 + 2 * 2 * 3 * SQ6 / 5)
    assert ev.holds and not ev.tight_upper


def test_degree_partition_empty_class_contributes_nothing(K13):
    # degree classes 1, 2, 3 with the middle one empty
    ev = bound_degree_partition(K13, connected_variant=True)
    assert ev.upper == approx(0.5 + 2 * 3 * 1 * SQ3 / 4)
    assert ev.holds


def test_degree_partition_inapplicable(K4):
    with pytest.raises(Inapplicable, match="regular"):
        bound_degree_partition(K4)
    g = disjoint_union(path_graph(3), complete_graph(2))
    with pytest.raises(Inapplicable, match="disconnected"):
        bound_degree_partition(g, connected_variant=True)
    assert bound_degree_partition(g).params["connected_variant"] == 0


def test_abc(P3, K23, K13):
    abc1, abc2 = bound_abc(P3)
    assert abc1.lower == approx(GA_P3) and abc1.upper == approx(GA_P3)
    assert abc1.tight_lower and abc1.tight_upper
    _, abc2 = bound_abc(K23)
    assert abc2.lower == approx(GA_K23) and abc2.tight_lower
    abc1, _ = bound_abc(K13)
    assert abc1.lower == approx(2 * 3 * SQ3 / 4) and abc1.tight_lower
    for g in (P3, K23, K13):
        for ev in bound_abc(g):
            assert ev.checks["remark_reformulation"]


def test_abc_regular_inapplicable(K4):
    with pytest.raises(Inapplicable):
        bound_abc(K4)


def test_mi_k23(K23):
    head, tail = bound_mi(K23)
    assert head.lower == approx(GA_K23) and head.tight_lower
    assert tail.lower == approx(GA_K23) and tail.tight_lower
    assert head.upper == 6 == tail.upper


def test_mi_diamond(diamond):
    head, tail = bound_mi(diamond)
    value = 4 * 2 * SQ6 / 5 + 1
    assert head.value == approx(value)
    # every edge of the diamond meets a degree-3 vertex
    assert head.tight_lower and head.structural_lower
    assert tail.lower == approx(2 * SQ6) and not tail.tight_lower and tail.structural_lower is False


def test_mi_needs_min_degree_two(P3):
    with pytest.raises(Inapplicable, match="below 2"):
        bound_mi(P3)


def test_pendant(K13, P3):
    ev = bound_pendant(K13)
    assert ev.lower == approx(GA_K13) and ev.tight_lower
    assert ev.upper == approx(2 * SQ2)
    ev = bound_pendant(P3)
    assert ev.lower == approx(GA_P3) and ev.upper == approx(GA_P3)


@pytest.mark.parametrize(
    "g, reason",
    [
        (complete_graph(4), "minimum degree"),
        (complete_graph(2), "fewer than 3"),
        (disjoint_union(path_graph(3), complete_graph(2)), "disconnected"),
    ],
)
def test_pendant_inapplicable(g, reason):
    with pytest.raises(Inapplicable, match=reason):
        bound_pendant(g)
    with pytest.raises(Inapplicable, match=reason):
        bound_delta1(g)


def test_delta1(K13, P3, P4):
    ev = bound_delta1(K13)
    assert ev.params["delta1"] == 3 and ev.upper == approx(GA_K13) and ev.tight_upper
    ev = bound_delta1(P3)
    assert ev.params["delta1"] == 2 and ev.upper == approx(GA_P3)
    ev = bound_delta1(P4)
    assert ev.upper == approx(GA_P3 + 1) and ev.value == approx(2 * (2 * SQ2 / 3) + 1) and ev.tight_upper


def test_gradient_minmax(K4, P3, paw):
    ev = bound_gradient_minmax(K4)
    assert ev.params == {"d": 0, "D": 0} and ev.lower == approx(6) and ev.upper == approx(6)
    ev = bound_gradient_minmax(P3)
    assert ev.lower == approx(GA_P3) and ev.upper == approx(GA_P3)
    ev = bound_gradient_minmax(paw)
    assert ev.params == {"d": 0, "D": 2}
    assert ev.lower < ev.value < ev.upper
    assert ev.agreement_lower and ev.agreement_upper


def test_gradient_partition(P3, K23, K4):
    for g, v in ((P3, GA_P3), (K23, GA_K23), (K4, 6.0)):
        ev = bound_gradient_partition(g)
        assert ev.lower == approx(v) and ev.upper == approx(v)
        assert ev.structural_lower and ev.structural_upper


def test_gradient_partition_flat_edge_finding(P4):
    # The flat middle edge of P4 joins two degree-2 vertices, so P4 is not in
    # G2^0, yet a flat edge contributes exactly 1 to both GA1 and the bound.
    ev = bound_gradient_partition(P4)
    assert ev.tight_lower and ev.structural_lower is False
    assert ev.agreement_lower is False


def test_order(K4, K13, C4, P3):
    assert bound_order(K4).lower == approx(6) and bound_order(K4).tight_lower
    assert bound_order(K13).lower == approx(GA_K13) and bound_order(K13).tight_lower
    ev = bound_order(C4)
    assert ev.lower == approx(8 * SQ6 / 5) and ev.value == 4 and not ev.tight_lower
    assert ev.structural_lower is False
    # P3 is the star K_{1,2}
    assert bound_order(P3).tight_lower and bound_order(P3).structural_lower


@pytest.mark.parametrize("alpha", [-2, -1, -0.5, 0, 0.5, 1, 2, 3.7])
def test_variable_zagreb_regular_collapse(K4, alpha):
    ev = bound_variable_zagreb(K4, alpha)
    assert ev.params["c1"] == pytest.approx(3 ** (2 * alpha))
    assert ev.params["c2"] == pytest.approx(3 ** (2 * alpha))
    assert ev.lower == approx(6) and ev.upper == approx(6)


def test_variable_zagreb_path(P3):
    ev = bound_variable_zagreb(P3, 1)
    assert ev.params["c1"] == 0.5 and ev.params["z_alpha"] == 4 and ev.lower == approx(0.5)
    ev = bound_variable_zagreb(P3, -1)
    assert ev.params["c1"] == 0.25 and ev.lower == approx(1.0)
    assert ev.params["c2"] == approx(25 / 16) and ev.upper == approx(6.25)
    assert ev.bound_id == "zalpha@-1"


def test_variable_zagreb_branch_continuity(K23):
    ev = bound_variable_zagreb(K23, -0.5)
    assert ev.checks == {"branch_continuity": True}
    assert ev.bound_id == "zalpha@-0.5"


def test_m2(P3, K4, K23):
    ev = bound_m2(P3)
    assert ev.lower == approx(0.5) and ev.upper == approx(12.5)
    ev = bound_m2(K4)
    assert ev.lower == approx(6) and ev.upper == approx(6)
    ev = bound_m2(K23)
    assert ev.lower == approx(8 / 3) and ev.checks["matches_zalpha_1"]


def test_m2_h2(P3, K4):
    ev = bound_m2_h2(P3)
    assert ev.upper == approx(GA_P3) and ev.tight_upper and ev.params["lambda"] == 18
    assert ev.lower == approx(16 * SQ2 / 15) and not ev.tight_lower
    assert all(ev.checks.values())
    ev = bound_m2_h2(K4)
    assert ev.lower == approx(6) and ev.upper == approx(6)


def test_m2_sharp(P3, K4):
    ev = bound_m2_sharp(P3)
    assert ev.lower == approx(1.0) and ev.upper == approx(27 * SQ2 / 8)
    assert ev.checks == {"improves_m2_lower": True, "improves_m2_upper": True}
    ev = bound_m2_sharp(K4)
    assert ev.lower == approx(6) and ev.upper == approx(6)


def test_harmonic(P3, K4):
    ev = bound_harmonic(P3)
    assert ev.lower == approx(16 / 9) and ev.upper == approx(3 / SQ2)
    ev = bound_harmonic(K4)
    assert ev.params["harmonic"] == approx(2.0) and ev.params["z_minus1"] == approx(6 / 9)
    assert ev.lower == approx(6) and ev.upper == approx(6)


def test_forgotten_bound(P3, K4, K13):
    ev = bound_forgotten(P3)
    assert ev.lower == -1 and ev.upper == 2.75 and ev.vacuous and ev.holds
    ev = bound_forgotten(K4)
    assert ev.lower == 6 and ev.upper == 6 and not ev.vacuous
    ev = bound_forgotten(K13)
    assert ev.lower == -9 and ev.upper == approx(13 / 3)


def test_cassels_equality():
    v = cassels_check(CasselsInstance((1.0, 2.0), (1.0, 2.0), 1.0, 1.0))
    assert v.holds and v.equality and v.equality_predicted


def test_cassels_strict():
    v = cassels_check(CasselsInstance((1.0, 2.0), (1.0, 1.0), 1.0, 2.0))
    assert v.lhs == pytest.approx(math.sqrt(5) * SQ2)
    assert v.rhs == pytest.approx(0.5 * (SQ2 + 1 / SQ2) * 3)
    assert v.holds and not v.equality and not v.equality_predicted


@pytest.mark.parametrize(
    "a, b, w, W",
    [((0.0, 0.0), (1.0, 1.0), 1.0, 2.0), ((1.0,), (1.0, 2.0), 1.0, 1.0), ((1.0,), (1.0,), 2.0, 1.0)],
)
def test_cassels_rejects(a, b, w, W):
    with pytest.raises(CasselsError):
        CasselsInstance(a, b, w, W)


def test_evaluate_all_regular(K4):
    evs = evaluate_all(K4, alphas=(1, -1))
    applied = [e for e in evs if e.inapplicable is None]
    assert {e.bound_id for e in applied} >= {"basic", "order", "zalpha@1", "zalpha@-1", "m2", "forgotten"}
    for e in applied:
        assert e.tight_lower in (True, None) and e.tight_upper in (True, None), e.bound_id


def test_evaluate_all_path(P3):
    evs = {e.bound_id: e for e in evaluate_all(P3)}
    assert evs["basic"].tight_lower
    assert evs["m2_h2"].tight_upper
    assert evs["order"].tight_lower
    assert evs["mi_head"].inapplicable


def test_evaluate_all_k23(K23):
    evs = {e.bound_id: e for e in evaluate_all(K23)}
    for bid in ("basic", "mi_head", "mi_tail", "grad_partition"):
        assert evs[bid].tight_lower, bid


def test_evaluate_all_ordering(K23):
    ids = [e.bound_id for e in evaluate_all(K23, alphas=(2, -2, 0.5))]
    assert ids == sorted(ids, key=sort_key)
    assert ids.index("zalpha@-2") < ids.index("zalpha@0.5") < ids.index("zalpha@2") < ids.index("m2")


def test_cassels_equality_outside_predicted_case():
    # a_j / b_j sits at Omega on a light coordinate and at omega on a heavy one:
    # sum a^2 = 20, sum b^2 = 5, sum ab = 8, so both sides equal 10 exactly
    v = cassels_check(CasselsInstance((4.0, 2.0), (1.0, 2.0), 1.0, 4.0))
    assert v.lhs == approx(10.0) and v.rhs == approx(10.0)
    assert v.holds and v.equality and not v.equality_predicted
