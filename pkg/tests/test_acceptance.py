"""Acceptance criteria 1-9. Each test prints one ``criterion N: PASS|FAIL`` line.

Run directly (``python3 tests/test_acceptance.py``) or under pytest.
"""

import itertools
import random
import sys
import time
from fractions import Fraction

import pytest

from holodual.cyclo import Cyclotomic, character_sum, root_of_unity
from holodual.finab import FiniteAbelianGroup, abelian_group, brute_image, brute_kernel
from holodual.groups import alternating, dihedral, from_abelian, klein4, quaternion8, symmetric
from holodual.hopf import (
    FDHopf,
    check_hopf_axioms,
    double_dual_canonical,
    dual_hopf,
    evaluation_pairing,
    function_algebra_hopf,
    group_algebra_hopf,
    is_hopf_isomorphism,
)
from holodual.hopftowers import (
    group_tower,
    ind_group_algebra,
    pro_function_algebra,
    product_pro_groups,
    reflexivity_check,
    spectrum_cross_check,
    symmetric_tower,
)
from holodual.locfun import LocallyConstantFunction, decompose_characters, inflate, psi_iso, reconstruct
from holodual.towers import (
    direct_sum_tower,
    dual_ind,
    dual_pro,
    factorial_ind,
    padic,
    product_pro,
    pruefer,
    reflexivity_check_ind,
    reflexivity_check_pro,
)
from test_finab import check_snf


@pytest.fixture
def verdict(capsys):
    def emit(n: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'} ({detail})")
        assert ok, detail

    return emit


def test_criterion_1_abelian_reflexivity(verdict):
    start = time.perf_counter()
    ok = all(reflexivity_check_ind(T).passed for T in
             [pruefer(2, 6), pruefer(3, 6), pruefer(5, 6), direct_sum_tower(2, 6), factorial_ind(5)])
    ok &= all(reflexivity_check_pro(T).passed for T in [padic(2, 6), padic(3, 6), padic(5, 6), product_pro(6, 4)])
    elapsed = time.perf_counter() - start
    verdict(1, ok and elapsed < 5, f"abelian towers reflexive, {elapsed:.2f}s")


IND_BUILTINS = [pruefer(2, 13), pruefer(3, 8), pruefer(5, 5), pruefer(7, 4),
                direct_sum_tower(2, 13), direct_sum_tower(3, 8), factorial_ind(7)]
PRO_BUILTINS = [padic(2, 13), padic(3, 8), padic(5, 5), padic(7, 4), product_pro(2, 13), product_pro(6, 5)]


def test_criterion_2_duality_exchanges_classes(verdict):
    ok, biggest = True, 0
    for T in IND_BUILTINS:
        for t in dual_ind(T).transitions:
            biggest = max(biggest, t.source.order)
            ok &= len(brute_image(t)) == t.target.order
    for T in PRO_BUILTINS:
        for t in dual_pro(T).transitions:
            biggest = max(biggest, t.source.order)
            ok &= len(brute_kernel(t)) == 1
    verdict(2, ok and biggest <= 10**4, f"exhaustive counts up to order {biggest}")


def test_criterion_3_character_decomposition(verdict):
    rng = random.Random(20261019)
    count, ok = 0, True
    for T in (padic(2, 4), padic(3, 3)):
        for _ in range(100):
            level = rng.randint(1, T.depth)
            n = T.level(level).order
            table = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 7)) for _ in range(n))
            f = LocallyConstantFunction(T, level, table)
            ok &= reconstruct(decompose_characters(f), T, level) == f
            count += 1
    verdict(3, ok, f"{count} functions round-tripped")


def test_criterion_4_psi(verdict):
    groups = [abelian_group(2), abelian_group(4), FiniteAbelianGroup((2, 2)), abelian_group(3)]
    ok = all(psi_iso(A, B).rank() == A.order * B.order for A, B in itertools.product(groups, repeat=2))
    T = padic(2, 3)
    rng = random.Random(4)
    for n, m in [(1, 2), (1, 3), (2, 3)]:
        small, big = psi_iso(T.level(n), T.level(n)), psi_iso(T.level(m), T.level(m))
        Gm, Gn, proj = T.level(m), T.level(n), T.projection(m, n)
        for _ in range(5):
            f = LocallyConstantFunction(T, n, tuple(Fraction(rng.randint(-5, 5)) for _ in range(Gn.order)))
            h = LocallyConstantFunction(T, n, tuple(Fraction(rng.randint(-5, 5)) for _ in range(Gn.order)))
            F = small.elementary(f.table, h.table)
            lhs = big.elementary(inflate(f, m).table, inflate(h, m).table)
            rhs = tuple(F[small.product.index_of(Gn.index(proj(Gm.element_at(a))), Gn.index(proj(Gm.element_at(b))))]
                        for a, b in big.product.pairs)
            ok &= lhs == rhs
    verdict(4, ok, "full rank on 16 pairs, inflation compatible")


HOPF_GROUPS = [from_abelian(abelian_group(4)), klein4(), from_abelian(abelian_group(6)),
               symmetric(3), dihedral(4), quaternion8(), alternating(4)]


def test_criterion_5_hopf_axioms(verdict):
    ok = all(check_hopf_axioms(group_algebra_hopf(G)).passed and check_hopf_axioms(function_algebra_hopf(G)).passed
             for G in HOPF_GROUPS)
    A = group_algebra_hopf(from_abelian(abelian_group(4)))
    bad = FDHopf(A.dim, A.mult, A.unit, A.comult, A.counit, {i: {i: 1} for i in range(A.dim)}, "corrupted")
    r = check_hopf_axioms(bad)
    negative = not r.passed and all(x.witness is not None for x in r.failures())
    verdict(5, ok and negative, f"{2 * len(HOPF_GROUPS)} algebras pass, corrupted antipode caught")


def test_criterion_6_hopf_duality(verdict):
    ok = True
    for G in HOPF_GROUPS:
        ok &= is_hopf_isomorphism(evaluation_pairing(G))
        for H in (group_algebra_hopf(G), function_algebra_hopf(G)):
            dd = double_dual_canonical(H)
            ok &= dd.is_identity_matrix() and is_hopf_isomorphism(dd)
            ok &= check_hopf_axioms(dual_hopf(H)).passed
    verdict(6, ok, "C[G]' = C^G and identity double duals")


def test_criterion_7_hopf_tower_reflexivity(verdict):
    towers = [
        ind_group_algebra(symmetric_tower(4)),
        ind_group_algebra(group_tower(pruefer(2, 4))),
        pro_function_algebra(group_tower(padic(2, 4))),
        pro_function_algebra(product_pro_groups(symmetric(3), 2)),
    ]
    ok = True
    for H in towers:
        r = reflexivity_check(H)
        levels = {x.level for x in r.records if x.check == "double dual is Hopf isomorphism"}
        edges = r.artifacts["diagram"]["edges"]
        ok &= r.passed and levels == set(range(1, H.depth + 1))
        ok &= len(edges) == 4 and all(e["verified"] and e["certificate"]["reason"] for e in edges)
    verdict(7, ok, "four towers reflexive, certificates on every edge")


def test_criterion_8_spectrum_consistency(verdict):
    ok = True
    for T in (pruefer(2, 4), direct_sum_tower(3, 4)):
        r = spectrum_cross_check(T)
        squares = [x for x in r.records if x.check == "restriction square"]
        ok &= r.passed and len(squares) == T.depth - 1
    verdict(8, ok, "spectra match dual levels, squares commute")


def test_criterion_9_substrate(verdict):
    rng = random.Random(20261019)
    ok = True
    for _ in range(100):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        try:
            check_snf([[rng.randint(-20, 20) for _ in range(c)] for _ in range(r)])
        except AssertionError:
            ok = False
    for m in range(1, 25):
        for j in range(m):
            expected = m if j == 0 else 0
            ok &= character_sum(m, ((1, j * k) for k in range(m))) == expected
            ok &= sum((root_of_unity(m, j * k) for k in range(m)), Cyclotomic(1)) == expected
    verdict(9, ok, "100 SNF matrices, orthogonality m <= 24")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
