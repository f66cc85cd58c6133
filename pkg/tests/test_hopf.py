import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from holodual.cyclo import root_of_unity
from holodual.finab import FiniteAbelianGroup, abelian_group
from holodual.groups import (
    FiniteGroup,
    GroupHom,
    InvalidGroupHom,
    InvalidGroupTable,
    alternating,
    cyclic_group,
    dihedral,
    direct_product,
    from_abelian,
    group_from_literal,
    klein4,
    quaternion8,
    symmetric,
)
from holodual.hopf import (
    AxiomFailure,
    FDHopf,
    HopfMap,
    NonAbelian,
    check_hopf_axioms,
    check_spectrum,
    double_dual_canonical,
    dual_hopf,
    evaluation_pairing,
    function_algebra_hopf,
    group_algebra_hopf,
    group_hom_algebra_map,
    is_hopf_isomorphism,
    is_hopf_morphism,
    spectrum_abelian_group_algebra,
    trivial_hopf,
)

GROUPS = [
    from_abelian(abelian_group(4)),
    klein4(),
    from_abelian(abelian_group(6)),
    symmetric(3),
    dihedral(4),
    quaternion8(),
    alternating(4),
]


# -- groups


def test_group_orders():
    assert [G.order for G in GROUPS] == [4, 4, 6, 6, 8, 8, 12]
    assert symmetric(4).order == 24
    assert not symmetric(3).is_abelian and klein4().is_abelian
    assert not quaternion8().is_abelian and not dihedral(4).is_abelian


def test_group_literals():
    assert group_from_literal("cyclic:5").order == 5
    assert group_from_literal("quaternion8") == quaternion8()
    with pytest.raises(ValueError):
        group_from_literal("cyclic:x")


def test_bad_tables():
    with pytest.raises(InvalidGroupTable):
        FiniteGroup([[0, 1], [1, 1]])
    with pytest.raises(InvalidGroupTable):
        FiniteGroup([[0, 1, 2], [1, 2, 0], [2, 1, 0]])


def test_group_hom_validation():
    Z4, Z2 = cyclic_group(4), cyclic_group(2)
    assert GroupHom(Z4, Z2, [0, 1, 0, 1]).is_surjective
    with pytest.raises(InvalidGroupHom):
        GroupHom(Z4, Z2, [0, 1, 1, 0])


def test_direct_product():
    P = direct_product(cyclic_group(2), symmetric(3))
    assert P.order == 12 and not P.is_abelian


# -- independent dense oracle for the Hopf axioms


def dense(H):
    n = H.dim
    M = [[[Fraction(H.mult.get((i, j), {}).get(k, 0)) for k in range(n)] for j in range(n)] for i in range(n)]
    D = [[[Fraction(H.comult.get(i, {}).get((j, k), 0)) for k in range(n)] for j in range(n)] for i in range(n)]
    u = [Fraction(H.unit.get(k, 0)) for k in range(n)]
    e = [Fraction(c) for c in H.counit]
    S = [[Fraction(H.antipode.get(i, {}).get(j, 0)) for j in range(n)] for i in range(n)]
    return n, M, D, u, e, S


def dense_axioms(H) -> bool:
    n, M, D, u, e, S = dense(H)
    R = range(n)
    for i, j, k in itertools.product(R, R, R):
        for l in R:
            lhs = sum(M[i][j][a] * M[a][k][l] for a in R)
            rhs = sum(M[j][k][a] * M[i][a][l] for a in R)
            if lhs != rhs:
                return False
    for i, l in itertools.product(R, R):
        if sum(u[a] * M[a][i][l] for a in R) != (i == l) or sum(u[a] * M[i][a][l] for a in R) != (i == l):
            return False
    for i, a, b, c in itertools.product(R, R, R, R):
        if sum(D[i][x][c] * D[x][a][b] for x in R) != sum(D[i][a][x] * D[x][b][c] for x in R):
            return False
    for i, a in itertools.product(R, R):
        if sum(D[i][x][a] * e[x] for x in R) != (i == a) or sum(D[i][a][x] * e[x] for x in R) != (i == a):
            return False
    for i, j in itertools.product(R, R):
        # Delta(e_i e_j) = Delta(e_i) Delta(e_j) in H (x) H
        for a, b in itertools.product(R, R):
            lhs = sum(M[i][j][k] * D[k][a][b] for k in R)
            rhs = sum(D[i][p][q] * D[j][r][s] * M[p][r][a] * M[q][s][b] for p, q, r, s in itertools.product(R, R, R, R) if D[i][p][q] and D[j][r][s])
            if lhs != rhs:
                return False
        if sum(M[i][j][k] * e[k] for k in R) != e[i] * e[j]:
            return False
    for a, b in itertools.product(R, R):
        if sum(u[k] * D[k][a][b] for k in R) != u[a] * u[b]:
            return False
    if sum(u[k] * e[k] for k in R) != 1:
        return False
    for i in R:
        for l in R:
            left = sum(D[i][a][b] * S[a][c] * M[c][b][l] for a, b, c in itertools.product(R, R, R) if D[i][a][b])
            right = sum(D[i][a][b] * S[b][c] * M[a][c][l] for a, b, c in itertools.product(R, R, R) if D[i][a][b])
            if left != e[i] * u[l] or right != e[i] * u[l]:
                return False
    return True


@pytest.mark.parametrize("G", GROUPS[:6], ids=lambda G: G.name)
def test_checker_matches_dense_oracle(G):
    for H in (group_algebra_hopf(G), function_algebra_hopf(G)):
        assert check_hopf_axioms(H).passed
        assert dense_axioms(H)


@pytest.mark.parametrize("G", GROUPS + [symmetric(4)], ids=lambda G: G.name)
def test_both_constructions_pass(G):
    A, F = group_algebra_hopf(G), function_algebra_hopf(G)
    assert check_hopf_axioms(A).passed and check_hopf_axioms(F).passed
    assert A.is_cocommutative and F.is_commutative
    assert A.is_commutative == G.is_abelian == F.is_cocommutative


def test_group_algebra_examples():
    A = group_algebra_hopf(cyclic_group(2))
    assert A.antipode_matrix() == [[1, 0], [0, 1]]
    A3 = group_algebra_hopf(cyclic_group(3))
    assert A3.antipode_matrix() == [[1, 0, 0], [0, 0, 1], [0, 1, 0]]
    S3 = group_algebra_hopf(symmetric(3))
    assert S3.dim == 6 and not S3.is_commutative and S3.is_cocommutative


def test_function_algebra_examples():
    F = function_algebra_hopf(cyclic_group(2))
    assert F.comult[0] == {(0, 0): 1, (1, 1): 1}
    assert F.unit == {0: 1, 1: 1}
    F3 = function_algebra_hopf(symmetric(3))
    assert F3.is_commutative and not F3.is_cocommutative


def corrupt_antipode(H, i, j):
    antipode = dict(H.antipode)
    antipode[i] = {j: 1}
    return FDHopf(H.dim, H.mult, H.unit, H.comult, H.counit, antipode, H.name + "~")


def test_negative_control():
    A = group_algebra_hopf(cyclic_group(4))
    bad = FDHopf(A.dim, A.mult, A.unit, A.comult, A.counit, {i: {i: 1} for i in range(4)}, "bad")
    r = check_hopf_axioms(bad)
    assert not r.passed
    fails = {x.check: x.witness for x in r.failures()}
    assert set(fails) == {"left antipode", "right antipode"}
    assert fails["left antipode"][0] in (1, 3)
    assert not dense_axioms(bad)
    with pytest.raises(AxiomFailure):
        dual_hopf(bad)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(GROUPS[:5]), st.data())
def test_checker_agrees_with_oracle_on_corruptions(G, data):
    H = data.draw(st.sampled_from([group_algebra_hopf(G), function_algebra_hopf(G)]))
    i = data.draw(st.integers(0, H.dim - 1))
    j = data.draw(st.integers(0, H.dim - 1))
    bad = corrupt_antipode(H, i, j)
    assert check_hopf_axioms(bad).passed == dense_axioms(bad)


@pytest.mark.parametrize("G", GROUPS, ids=lambda G: G.name)
def test_duality(G):
    A = group_algebra_hopf(G)
    D = dual_hopf(A)
    assert D.dim == A.dim and check_hopf_axioms(D).passed
    f = evaluation_pairing(G)
    assert f.source.same_structure(D)
    assert is_hopf_isomorphism(f)
    dd = double_dual_canonical(A)
    assert dd.is_identity_matrix() and is_hopf_isomorphism(dd)
    F = function_algebra_hopf(G)
    assert is_hopf_isomorphism(HopfMap.identity(F, dual_hopf(dual_hopf(F))))
    assert dual_hopf(F).is_cocommutative


def test_double_dual_examples():
    assert double_dual_canonical(trivial_hopf()).is_identity_matrix()
    assert is_hopf_isomorphism(double_dual_canonical(function_algebra_hopf(klein4())))


def test_morphism_examples():
    A = group_algebra_hopf(cyclic_group(4))
    assert is_hopf_morphism(HopfMap.identity(A))
    assert not is_hopf_morphism(HopfMap(A, A, {}))
    B = group_algebra_hopf(cyclic_group(2))
    q = group_hom_algebra_map(GroupHom(cyclic_group(4), cyclic_group(2), [0, 1, 0, 1]), A, B)
    assert is_hopf_morphism(q) and q.is_surjective and not is_hopf_isomorphism(q)


# -- spectrum


def test_spectrum_examples():
    pts = spectrum_abelian_group_algebra(abelian_group(2))
    assert [list(p.values) for p in pts] == [[1, 1], [1, -1]]
    z = root_of_unity(3)
    pts = spectrum_abelian_group_algebra(abelian_group(3))
    assert sorted(str(v) for v in pts[1].values) == sorted(str(v) for v in (1, z, z * z))
    G = abelian_group(4)
    for p in spectrum_abelian_group_algebra(G):
        for g, h in itertools.product(G.elements(), repeat=2):
            assert p.values[G.index(g)] * p.values[G.index(h)] == p.values[G.index(g + h)]


@pytest.mark.parametrize("orders", [(2,), (4,), (2, 2), (6,), (2, 4), (3, 3), (12,)])
def test_check_spectrum(orders):
    G = FiniteAbelianGroup(orders)
    assert check_spectrum(G).passed
    assert check_spectrum(from_abelian(G)).passed


def test_spectrum_rejects_nonabelian():
    with pytest.raises(NonAbelian):
        spectrum_abelian_group_algebra(symmetric(3))


def test_spectrum_detects_corruption():
    G = abelian_group(4)
    pts = spectrum_abelian_group_algebra(G)
    pts[2] = type(pts[2])(pts[2].character, (pts[2].values[0], pts[2].values[1]) + pts[2].values[2:][::-1])
    r = check_spectrum(G, pts)
    assert not r.passed
