import itertools
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from holodual.finab import (
    DualGroup,
    FiniteAbelianGroup,
    Hom,
    InfiniteCokernel,
    InvalidGroup,
    InvalidHom,
    QmodZ,
    abelian_group,
    brute_image,
    brute_kernel,
    dual_group,
    dual_hom,
    evaluation_map,
    from_presentation,
    is_injective,
    is_isomorphism,
    is_surjective,
    pair,
    smith_normal_form,
)


def det(M):
    """Exact determinant by fraction-valued elimination (independent of the SNF code)."""
    A = [[Fraction(x) for x in row] for row in M]
    n, d = len(A), Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if A[r][c]), None)
        if p is None:
            return 0
        if p != c:
            A[c], A[p] = A[p], A[c]
            d = -d
        d *= A[c][c]
        for r in range(c + 1, n):
            f = A[r][c] / A[c][c]
            A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    return int(d)


def minors_gcd(M, k):
    rows, cols = len(M), len(M[0])
    g = 0
    for R in itertools.combinations(range(rows), k):
        for C in itertools.combinations(range(cols), k):
            g = math.gcd(g, det([[M[r][c] for c in C] for r in R]))
    return g


def oracle_diagonal(M):
    """Invariant factors d_k = g_k / g_{k-1} with g_k the gcd of k x k minors."""
    out, prev = [], 1
    for k in range(1, min(len(M), len(M[0])) + 1):
        g = minors_gcd(M, k)
        if g == 0:
            out.append(0)
            prev = 0
            continue
        out.append(g // prev)
        prev = g
    return out


def matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def check_snf(M):
    U, D, V = smith_normal_form(M)
    assert matmul(matmul(U, D), V) == [list(r) for r in M]
    assert abs(det(U)) == 1 and abs(det(V)) == 1
    k = min(len(M), len(M[0]))
    diag = [D[i][i] for i in range(k)]
    assert all(D[i][j] == 0 for i in range(len(D)) for j in range(len(D[0])) if i != j)
    assert all(x >= 0 for x in diag)
    for a, b in zip(diag, diag[1:]):
        assert b == 0 if a == 0 else b % a == 0
    assert diag == oracle_diagonal(M)
    return diag


def test_snf_example():
    assert check_snf([[2, 4], [6, 8]]) == [2, 4]


def test_snf_identity_and_zero():
    U, D, V = smith_normal_form([[1, 0], [0, 1]])
    assert D == [[1, 0], [0, 1]]
    assert check_snf([[0, 0, 0], [0, 0, 0]]) == [0, 0]


def test_snf_random_suite():
    rng = random.Random(20261019)
    for _ in range(100):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        M = [[rng.randint(-20, 20) for _ in range(c)] for _ in range(r)]
        check_snf(M)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-12, 12), min_size=3, max_size=3), min_size=1, max_size=4))
def test_snf_property(M):
    check_snf(M)


def test_from_presentation_examples():
    assert from_presentation([[2, 0], [0, 4]]).invariant_factors == (2, 4)
    assert from_presentation([[2, 0], [0, 3]]).invariant_factors == (6,)
    assert from_presentation([[1]]).invariant_factors == ()


def test_from_presentation_infinite():
    with pytest.raises(InfiniteCokernel):
        from_presentation([[2, 0]])


def test_group_validation():
    with pytest.raises(InvalidGroup):
        FiniteAbelianGroup((4, 2))
    with pytest.raises(InvalidGroup):
        FiniteAbelianGroup((1, 2))
    assert FiniteAbelianGroup(()).order == 1


def brute_characters(G):
    """All homomorphisms G -> Q/Z: try every exponent-denominator value on each
    generator and keep the assignments that respect the generator orders."""
    m = G.exponent
    out = []
    for vals in itertools.product([Fraction(k, m) for k in range(m)], repeat=G.rank):
        if all((d * v).denominator == 1 for d, v in zip(G.invariant_factors, vals)):
            out.append(vals)
    return out


def test_dual_group_examples():
    assert dual_group(abelian_group(4)).invariant_factors == (4,)
    assert dual_group(FiniteAbelianGroup(())).order == 1
    G = FiniteAbelianGroup((2, 4))
    D = dual_group(G)
    assert D.invariant_factors == (2, 4)
    chars = brute_characters(G)
    assert len(chars) == D.order
    order = lambda vals: math.lcm(*(Fraction(v).denominator for v in vals))
    assert sorted(order(v) for v in chars) == sorted(chi.order() for chi in D.elements())


def test_dual_tag():
    G = abelian_group(4)
    D = dual_group(G)
    assert isinstance(D, DualGroup) and D.is_dual and D != G
    assert dual_group(D) != G


def test_pair_examples():
    G = abelian_group(4)
    D = dual_group(G)
    assert pair(G(1), D(1)) == Fraction(1, 4)
    assert all(pair(G.zero, chi) == 0 for chi in D.elements())
    H = FiniteAbelianGroup((2, 4))
    assert pair(H(1, 2), dual_group(H)(1, 1)) == 0


def test_pair_mismatch():
    with pytest.raises(ValueError):
        pair(abelian_group(4)(1), dual_group(abelian_group(8))(1))


def test_qmodz():
    q = QmodZ(Fraction(5, 4))
    assert q == Fraction(1, 4) and q.denominator == 4
    assert q + QmodZ(Fraction(3, 4)) == 0
    assert 4 * q == 0


def test_hom_validation():
    with pytest.raises(InvalidHom):
        Hom(abelian_group(2), abelian_group(4), [[1]])


def test_dual_hom_inclusion():
    f = Hom(abelian_group(2), abelian_group(4), [[2]])
    g = dual_hom(f)
    assert g.matrix == ((1,),)
    assert is_surjective(g) and not is_injective(g)
    # the pairing identity over all 8 pairs
    for x in f.source.elements():
        for eta in g.source.elements():
            assert pair(x, g(eta)) == pair(f(x), eta)


def test_dual_identity_and_zero():
    G = FiniteAbelianGroup((2, 6))
    D = dual_group(G)
    assert dual_hom(Hom.identity(G)).matrix == Hom.identity(D).matrix
    assert dual_hom(Hom.zero(G, abelian_group(3))).matrix == Hom.zero(dual_group(abelian_group(3)), D).matrix


def test_evaluation_map():
    assert evaluation_map(abelian_group(6)).matrix == ((1,),)
    G = FiniteAbelianGroup((2, 4))
    assert evaluation_map(G).matrix == ((1, 0), (0, 1))
    assert is_isomorphism(evaluation_map(G))
    f = Hom(abelian_group(2), abelian_group(4), [[2]])
    assert dual_hom(dual_hom(f)).matrix == f.matrix


def test_is_isomorphism_examples():
    G8 = abelian_group(8)
    assert is_isomorphism(Hom.identity(G8))
    assert not is_isomorphism(Hom(abelian_group(4), abelian_group(4), [[2]]))
    assert is_isomorphism(Hom(G8, G8, [[3]]))


# -- properties over random groups and homomorphisms

factors = st.lists(st.integers(1, 5), min_size=0, max_size=3).map(
    lambda xs: FiniteAbelianGroup(tuple(x for x in _chain(xs) if x > 1))
)

small = factors.filter(lambda G: G.order <= 48)


def _chain(xs):
    out, acc = [], 1
    for x in xs:
        acc *= x
        out.append(acc)
    return out


def random_hom(draw, G, H):
    rows = []
    for e in H.invariant_factors:
        row = []
        for d in G.invariant_factors:
            step = e // math.gcd(e, d)
            row.append(step * draw(st.integers(0, e)) % e)
        rows.append(row)
    return Hom(G, H, rows)


@st.composite
def homs(draw):
    G, H = draw(small), draw(small)
    return random_hom(draw, G, H)


@st.composite
def composable(draw):
    G, H, K = draw(factors), draw(factors), draw(factors)
    return random_hom(draw, G, H), random_hom(draw, H, K)


@settings(max_examples=80, deadline=None)
@given(factors.filter(lambda G: G.order <= 100))
def test_pairing_nondegenerate(G):
    D = dual_group(G)
    assert D.order == G.order
    for g in G.elements():
        if not g.is_zero():
            assert any(pair(g, chi) != 0 for chi in D.elements())


@settings(max_examples=80, deadline=None)
@given(homs())
def test_dual_hom_pairing_identity(f):
    g = dual_hom(f)
    for x in f.source.elements():
        for eta in g.source.elements():
            assert pair(x, g(eta)) == pair(f(x), eta)


@settings(max_examples=80, deadline=None)
@given(composable())
def test_dual_of_composition(fg):
    f, g = fg
    assert dual_hom(g @ f).matrix == (dual_hom(f) @ dual_hom(g)).matrix


@settings(max_examples=80, deadline=None)
@given(homs())
def test_injective_surjective_swap(f):
    inj = len(brute_kernel(f)) == 1
    surj = len(brute_image(f)) == f.target.order
    g = dual_hom(f)
    assert (len(brute_image(g)) == g.target.order) == inj
    assert (len(brute_kernel(g)) == 1) == surj
    assert is_injective(f) == inj and is_surjective(f) == surj


@settings(max_examples=80, deadline=None)
@given(homs())
def test_double_dual_entrywise(f):
    assert dual_hom(dual_hom(f)).matrix == f.matrix
    assert is_isomorphism(evaluation_map(f.source))


@settings(max_examples=50, deadline=None)
@given(factors)
def test_element_enumeration(G):
    elems = list(G.elements())
    assert len(elems) == G.order == len(set(elems))
    assert all(G.element_at(G.index(g)) == g for g in elems)
