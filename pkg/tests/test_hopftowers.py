import pytest

from holodual.groups import GroupHom, InvalidGroupHom, cyclic_group, symmetric
from holodual.hopf import HopfMap, group_algebra_hopf
from holodual.hopftowers import (
    Enveloped,
    IndHopf,
    ProHopf,
    TowerOfGroups,
    UnknownProvenance,
    arens_michael_envelope,
    canonical_comparison,
    dual_tower,
    expected_dual,
    group_tower,
    holomorphic_dual,
    ind_function_algebra,
    ind_group_algebra,
    pro_function_algebra,
    pro_group_algebra,
    product_pro_groups,
    reflexivity_check,
    spectrum_cross_check,
    symmetric_tower,
)
from holodual.towers import InvalidTower, direct_sum_tower, dual_pro, factorial_ind, padic, product_pro, pruefer


def test_dims():
    assert ind_group_algebra(symmetric_tower(3)).dims() == [1, 2, 6]
    assert ind_group_algebra(group_tower(pruefer(2, 3))).dims() == [2, 4, 8]
    H = pro_function_algebra(group_tower(padic(2, 3)))
    assert isinstance(H, IndHopf) and H.dims() == [2, 4, 8]
    assert pro_function_algebra(product_pro_groups(symmetric(3), 2)).dims() == [6, 36]
    one = pro_function_algebra(group_tower(padic(3, 1)))
    assert one.depth == 1 and one.transitions == ()


def test_output_classes():
    S = symmetric_tower(3)
    P = group_tower(padic(2, 3))
    assert isinstance(ind_group_algebra(S), IndHopf)
    assert isinstance(ind_function_algebra(S), ProHopf)
    assert isinstance(pro_function_algebra(P), IndHopf)
    assert isinstance(pro_group_algebra(P), ProHopf)
    with pytest.raises(InvalidTower):
        ind_group_algebra(P)


def test_corrupted_transition():
    A, B = group_algebra_hopf(symmetric(1)), group_algebra_hopf(symmetric(2))
    with pytest.raises(InvalidTower):
        IndHopf([A, B], [HopfMap(A, B, {0: {1: 1}})])
    Z2, Z4 = group_algebra_hopf(cyclic_group(2)), group_algebra_hopf(cyclic_group(4))
    with pytest.raises(InvalidTower):
        IndHopf([Z2, Z4], [HopfMap(Z2, Z4, {0: {0: 1}, 1: {1: 1}})])


def test_group_tower_validation():
    Z2, Z4 = cyclic_group(2), cyclic_group(4)
    with pytest.raises(InvalidGroupHom):
        GroupHom(Z2, Z4, [0, 1])
    with pytest.raises(InvalidTower):
        TowerOfGroups("ind", [Z2, Z4], [GroupHom(Z2, Z4, [0, 0])])
    with pytest.raises(InvalidTower):
        TowerOfGroups("pro", [Z2, Z4], [GroupHom(Z4, Z2, [0, 0, 0, 0])])


def test_dual_tower_examples():
    H = ind_group_algebra(symmetric_tower(3))
    D = dual_tower(H)
    assert isinstance(D, ProHopf) and D.dims() == [1, 2, 6]
    assert all(t.is_surjective for t in D.transitions)
    assert canonical_comparison(D, ind_function_algebra(symmetric_tower(3))).passed
    O = pro_function_algebra(group_tower(padic(2, 3)))
    Od = dual_tower(O)
    assert canonical_comparison(Od, pro_group_algebra(group_tower(padic(2, 3)))).passed
    one = ind_group_algebra(symmetric_tower(1))
    assert dual_tower(one).depth == 1


@pytest.mark.parametrize(
    "H",
    [
        ind_group_algebra(symmetric_tower(3)),
        ind_function_algebra(symmetric_tower(3)),
        pro_function_algebra(group_tower(padic(2, 3))),
        pro_group_algebra(product_pro_groups(cyclic_group(3), 2)),
        ind_group_algebra(group_tower(direct_sum_tower(2, 3))),
    ],
    ids=lambda H: H.name,
)
def test_dual_is_involution(H):
    D = dual_tower(H)
    assert canonical_comparison(D, expected_dual(H)).passed
    assert canonical_comparison(dual_tower(D), H).passed
    assert reflexivity_check(H).passed


def test_comparison_detects_shape_mismatch():
    H = ind_group_algebra(symmetric_tower(2))
    assert not canonical_comparison(H, dual_tower(H)).passed


def test_envelope():
    H = ind_group_algebra(symmetric_tower(3))
    E = arens_michael_envelope(H)
    assert E.tower is H
    assert E.certificate.reason == "locally finite: CG complete in strongest locally convex topology"
    assert arens_michael_envelope(E) == E
    assert holomorphic_dual(H).tower.provenance == "dual(group_algebra:ind)"
    O = pro_function_algebra(group_tower(padic(2, 2)))
    Od = dual_tower(O)
    E = arens_michael_envelope(Od)
    assert E.tower is Od and E.certificate.identified_as == "group_algebra:pro"


def test_envelope_guard():
    A = group_algebra_hopf(cyclic_group(2))
    loose = IndHopf([A], [])
    with pytest.raises(UnknownProvenance):
        arens_michael_envelope(loose)
    with pytest.raises(UnknownProvenance):
        reflexivity_check(loose)
    with pytest.raises(UnknownProvenance):
        arens_michael_envelope(IndHopf([A], [], provenance="hand made"))


def test_reflexivity_examples():
    r = reflexivity_check(ind_group_algebra(symmetric_tower(3)))
    assert r.passed
    levels = {x.level for x in r.records if x.check == "double dual is Hopf isomorphism"}
    assert levels == {1, 2, 3}
    edges = r.artifacts["diagram"]["edges"]
    assert len(edges) == 4 and all(e["verified"] and e["certificate"]["reason"] for e in edges)
    assert reflexivity_check(pro_function_algebra(group_tower(padic(3, 3)))).passed


def test_reflexivity_depth_one():
    r = reflexivity_check(ind_group_algebra(symmetric_tower(1)))
    assert r.passed and not [x for x in r.records if x.check == "naturality square"]


def test_enveloped_is_a_pair():
    E = arens_michael_envelope(pro_group_algebra(group_tower(padic(2, 2))))
    assert isinstance(E, Enveloped)
    tower, cert = E
    assert cert.level_dims == (2, 4)


ABELIAN_IND = [
    pruefer(2, 6),
    pruefer(3, 3),
    pruefer(5, 2),
    direct_sum_tower(2, 6),
    direct_sum_tower(3, 3),
    factorial_ind(4),
    dual_pro(padic(2, 6)),
    dual_pro(product_pro(2, 3)),
]


@pytest.mark.parametrize("T", ABELIAN_IND, ids=lambda T: T.name)
def test_spectrum_cross_check(T):
    r = spectrum_cross_check(T)
    assert r.passed
    assert len([x for x in r.records if x.check == "restriction square"]) == T.depth - 1
