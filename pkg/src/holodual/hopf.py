"""Finite-dimensional Hopf algebras over Q given by structure tensors.

Basis vectors are indexed ``0 .. dim-1``.  Sparse vectors are dicts
``index -> Fraction``; tensors in ``H (x) H`` are dicts keyed by index pairs.

* ``mult[(i, j)]``  : the vector ``e_i e_j``
* ``unit``          : the vector ``1``
* ``comult[i]``     : the tensor ``Delta(e_i)``
* ``counit[i]``     : ``epsilon(e_i)``
* ``antipode[i]``   : the vector ``S(e_i)``

Construction never verifies the axioms; :func:`check_hopf_axioms` does.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Mapping

from . import _linalg
from .cyclo import Cyclotomic, root_of_unity
from .finab import Element, FiniteAbelianGroup, dual_group, pair
from .groups import FiniteGroup, from_abelian
from .report import ANCHORS, Report

__all__ = [
    "AxiomFailure",
    "NonAbelian",
    "FDHopf",
    "HopfMap",
    "group_algebra_hopf",
    "function_algebra_hopf",
    "trivial_hopf",
    "check_hopf_axioms",
    "dual_hopf",
    "is_hopf_morphism",
    "hopf_morphism_report",
    "is_hopf_isomorphism",
    "double_dual_canonical",
    "evaluation_pairing",
    "group_hom_algebra_map",
    "SpectrumPoint",
    "spectrum_abelian_group_algebra",
    "check_spectrum",
]


class AxiomFailure(ValueError):
    pass


class NonAbelian(ValueError):
    pass


Vec = dict  # index -> Fraction


def _num(x):
    """Exact scalar; integral values stay ``int`` (much faster than Fraction)."""
    if isinstance(x, int):
        return x
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def _clean(v: Mapping) -> dict:
    return {k: _num(c) for k, c in v.items() if c}


def _axpy(acc: dict, c, v: Mapping) -> None:
    """``acc += c * v`` in place, dropping zeros."""
    for k, x in v.items():
        y = acc.get(k, 0) + c * x
        if y:
            acc[k] = y
        else:
            acc.pop(k, None)


@dataclass(frozen=True, eq=False)
class FDHopf:
    dim: int
    mult: dict
    unit: dict
    comult: dict
    counit: tuple
    antipode: dict
    name: str = "H"

    def __post_init__(self):
        n = self.dim
        mult = {(int(i), int(j)): _clean(v) for (i, j), v in self.mult.items()}
        comult = {int(i): _clean(t) for i, t in self.comult.items()}
        antipode = {int(i): _clean(v) for i, v in self.antipode.items()}
        counit = tuple(_num(c) for c in self.counit)
        if len(counit) != n:
            raise ValueError(f"counit has length {len(counit)}, expected {n}")
        indices = [k for v in mult.values() for k in v] + list(self.unit)
        indices += [k for t in comult.values() for pair_ in t for k in pair_] + [k for v in antipode.values() for k in v]
        indices += [i for ij in mult for i in ij] + list(comult) + list(antipode)
        if any(not 0 <= k < n for k in indices):
            raise ValueError("structure tensor index out of range")
        object.__setattr__(self, "mult", {k: v for k, v in mult.items() if v})
        object.__setattr__(self, "unit", _clean(self.unit))
        object.__setattr__(self, "comult", {k: t for k, t in comult.items() if t})
        object.__setattr__(self, "counit", counit)
        object.__setattr__(self, "antipode", {k: v for k, v in antipode.items() if v})

    # -- structure maps on sparse vectors

    def m(self, x: Mapping, y: Mapping) -> dict:
        out: dict = {}
        for i, a in x.items():
            for j, b in y.items():
                v = self.mult.get((i, j))
                if v:
                    _axpy(out, a * b, v)
        return out

    def delta(self, x: Mapping) -> dict:
        out: dict = {}
        for i, a in x.items():
            t = self.comult.get(i)
            if t:
                _axpy(out, a, t)
        return out

    def eps(self, x: Mapping) -> Fraction:
        return sum(a * self.counit[i] for i, a in x.items())

    def S(self, x: Mapping) -> dict:
        out: dict = {}
        for i, a in x.items():
            v = self.antipode.get(i)
            if v:
                _axpy(out, a, v)
        return out

    def basis(self, i: int) -> dict:
        return {i: 1}

    def antipode_matrix(self) -> list[list[Fraction]]:
        rows = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for i, v in self.antipode.items():
            for j, c in v.items():
                rows[j][i] = c
        return rows

    @cached_property
    def _left_support(self) -> dict:
        # i -> [(j, e_i e_j)] over nonzero products
        out = defaultdict(list)
        for (i, j), v in self.mult.items():
            out[i].append((j, v))
        return out

    @cached_property
    def _comult_by_first(self) -> dict:
        # i -> a -> [(b, coeff)] for Delta(e_i) = sum coeff e_a (x) e_b
        out: dict = {}
        for i, t in self.comult.items():
            d = defaultdict(list)
            for (a, b), c in t.items():
                d[a].append((b, c))
            out[i] = d
        return out

    @cached_property
    def axiom_report(self) -> Report:
        return check_hopf_axioms(self)

    @property
    def is_commutative(self) -> bool:
        return all(self.mult.get((j, i), {}) == v for (i, j), v in self.mult.items()) and all(
            (j, i) in self.mult for (i, j) in self.mult
        )

    @property
    def is_cocommutative(self) -> bool:
        return all({(b, a): c for (a, b), c in t.items()} == t for t in self.comult.values())

    def same_structure(self, other: FDHopf) -> bool:
        return (
            self.dim == other.dim
            and self.mult == other.mult
            and self.unit == other.unit
            and self.comult == other.comult
            and self.counit == other.counit
            and self.antipode == other.antipode
        )

    def to_json(self) -> dict:
        q = str
        return {
            "kind": "hopf",
            "name": self.name,
            "dim": self.dim,
            "mult": [[i, j, k, q(c)] for (i, j), v in sorted(self.mult.items()) for k, c in sorted(v.items())],
            "unit": [[k, q(c)] for k, c in sorted(self.unit.items())],
            "comult": [[i, j, k, q(c)] for i, t in sorted(self.comult.items()) for (j, k), c in sorted(t.items())],
            "counit": [q(c) for c in self.counit],
            "antipode": [[i, j, q(c)] for i, v in sorted(self.antipode.items()) for j, c in sorted(v.items())],
        }


def group_algebra_hopf(G: FiniteGroup) -> FDHopf:
    """``C[G]``: basis ``G``, ``Delta g = g (x) g``, ``epsilon(g) = 1``, ``S g = g^-1``."""
    n = G.order
    return FDHopf(
        dim=n,
        mult={(a, b): {G.mul(a, b): 1} for a in range(n) for b in range(n)},
        unit={G.identity: 1},
        comult={a: {(a, a): 1} for a in range(n)},
        counit=(1,) * n,
        antipode={a: {G.inverse[a]: 1} for a in range(n)},
        name=f"C[{G.name}]",
    )


def function_algebra_hopf(G: FiniteGroup) -> FDHopf:
    """``C^G``: basis of indicators ``delta_g`` with pointwise product and
    ``Delta delta_g = sum_{xy=g} delta_x (x) delta_y``."""
    n = G.order
    comult: dict = {g: {} for g in range(n)}
    for x in range(n):
        for y in range(n):
            comult[G.mul(x, y)][(x, y)] = 1
    return FDHopf(
        dim=n,
        mult={(a, a): {a: 1} for a in range(n)},
        unit={a: 1 for a in range(n)},
        comult=comult,
        counit=tuple(int(a == G.identity) for a in range(n)),
        antipode={a: {G.inverse[a]: 1} for a in range(n)},
        name=f"C^{G.name}",
    )


def trivial_hopf() -> FDHopf:
    return FDHopf(1, {(0, 0): {0: 1}}, {0: 1}, {0: {(0, 0): 1}}, (1,), {0: {0: 1}}, "Q")


# --------------------------------------------------------------------------
# axioms


def _tensor_mul(H: FDHopf, s: Mapping, t: Mapping) -> dict:
    """Product in ``H (x) H``."""
    out: dict = {}
    for (a, b), x in s.items():
        for (c, d), y in t.items():
            u = H.mult.get((a, c))
            if not u:
                continue
            v = H.mult.get((b, d))
            if not v:
                continue
            for k, p in u.items():
                for l, q in v.items():
                    key = (k, l)
                    z = out.get(key, 0) + x * y * p * q
                    if z:
                        out[key] = z
                    else:
                        out.pop(key)
    return out


def _delta_product(H: FDHopf, i: int, j: int) -> dict:
    """``Delta(e_i) Delta(e_j)`` using only nonzero products."""
    by_first = H._comult_by_first.get(j, {})
    out: dict = {}
    for (a, b), x in H.comult.get(i, {}).items():
        for c, ac in H._left_support.get(a, ()):
            second = by_first.get(c)
            if not second:
                continue
            for d, y in second:
                bd = H.mult.get((b, d))
                if not bd:
                    continue
                for k, p in ac.items():
                    for l, q in bd.items():
                        key = (k, l)
                        z = out.get(key, 0) + x * y * p * q
                        if z:
                            out[key] = z
                        else:
                            out.pop(key)
    return out


def _coassoc_sides(H: FDHopf, i: int) -> tuple[dict, dict]:
    left: dict = {}
    right: dict = {}
    for (a, b), c in H.comult.get(i, {}).items():
        for (x, y), d in H.comult.get(a, {}).items():
            key = (x, y, b)
            left[key] = left.get(key, 0) + c * d
        for (x, y), d in H.comult.get(b, {}).items():
            key = (a, x, y)
            right[key] = right.get(key, 0) + c * d
    return _clean(left), _clean(right)


def check_hopf_axioms(H: FDHopf) -> Report:
    """Verify every Hopf algebra axiom exactly; failures carry basis-index witnesses."""
    report = Report(f"Hopf axioms for {H.name} (dim {H.dim})")
    anchor = ANCHORS["hopf_axioms"]
    n = H.dim
    rng = range(n)
    e = H.basis
    one = H.unit

    def first(cond_iter):
        return next((w for w, ok in cond_iter if not ok), None)

    w = first(
        ((i, j, k), H.m(H.m(e(i), e(j)), e(k)) == H.m(e(i), H.m(e(j), e(k))))
        for i, j, k in itertools.product(rng, repeat=3)
    )
    report.add("associativity", w is None, anchor, witness=w and list(w))
    w = first(((i,), H.m(one, e(i)) == e(i)) for i in rng)
    report.add("left unit", w is None, anchor, witness=w and list(w))
    w = first(((i,), H.m(e(i), one) == e(i)) for i in rng)
    report.add("right unit", w is None, anchor, witness=w and list(w))

    w = first(((i,), (lambda s: s[0] == s[1])(_coassoc_sides(H, i))) for i in rng)
    report.add("coassociativity", w is None, anchor, witness=w and list(w))

    def counit_side(i, side):
        out: dict = {}
        for (a, b), c in H.comult.get(i, {}).items():
            k, idx = (H.counit[a], b) if side == "left" else (H.counit[b], a)
            if k:
                _axpy(out, c * k, {idx: 1})
        return out

    w = first(((i,), counit_side(i, "left") == e(i)) for i in rng)
    report.add("left counit", w is None, anchor, witness=w and list(w))
    w = first(((i,), counit_side(i, "right") == e(i)) for i in rng)
    report.add("right counit", w is None, anchor, witness=w and list(w))

    w = first(
        ((i, j), H.delta(H.m(e(i), e(j))) == _delta_product(H, i, j)) for i, j in itertools.product(rng, repeat=2)
    )
    report.add("comultiplication multiplicative", w is None, anchor, witness=w and list(w))
    one_one = {(a, b): x * y for a, x in one.items() for b, y in one.items()}
    report.add("comultiplication unital", H.delta(one) == _clean(one_one), anchor, witness=[])
    w = first(
        ((i, j), H.eps(H.m(e(i), e(j))) == H.counit[i] * H.counit[j]) for i, j in itertools.product(rng, repeat=2)
    )
    report.add("counit multiplicative", w is None, anchor, witness=w and list(w))
    report.add("counit unital", H.eps(one) == 1, anchor, witness=[])

    def antipode_side(i, side):
        out: dict = {}
        for (a, b), c in H.comult.get(i, {}).items():
            prod = H.m(H.S(e(a)), e(b)) if side == "left" else H.m(e(a), H.S(e(b)))
            _axpy(out, c, prod)
        return out

    def eps_one(i):
        return _clean({k: H.counit[i] * c for k, c in one.items()})

    w = first(((i,), antipode_side(i, "left") == eps_one(i)) for i in rng)
    report.add("left antipode", w is None, anchor, witness=w and list(w))
    w = first(((i,), antipode_side(i, "right") == eps_one(i)) for i in rng)
    report.add("right antipode", w is None, anchor, witness=w and list(w))
    return report


# --------------------------------------------------------------------------
# duality and morphisms


def dual_hopf(H: FDHopf, check: bool = True) -> FDHopf:
    """Dual Hopf algebra on the dual basis: every structure map is transposed.

    The product of the dual is the transpose of ``Delta`` and its coproduct
    the transpose of the product; unit and counit trade places.
    """
    if check and not H.axiom_report.passed:
        bad = ", ".join(r.check for r in H.axiom_report.failures())
        raise AxiomFailure(f"{H.name} is not a Hopf algebra ({bad})")
    mult: dict = defaultdict(dict)
    for i, t in H.comult.items():
        for (j, k), c in t.items():
            mult[(j, k)][i] = c
    comult: dict = defaultdict(dict)
    for (i, j), v in H.mult.items():
        for k, c in v.items():
            comult[k][(i, j)] = c
    antipode: dict = defaultdict(dict)
    for i, v in H.antipode.items():
        for j, c in v.items():
            antipode[j][i] = c
    return FDHopf(
        dim=H.dim,
        mult=dict(mult),
        unit={i: c for i, c in enumerate(H.counit) if c},
        comult=dict(comult),
        counit=tuple(H.unit.get(i, 0) for i in range(H.dim)),
        antipode=dict(antipode),
        name=f"({H.name})'",
    )


@dataclass(frozen=True, eq=False)
class HopfMap:
    """Linear map given by the images of basis vectors (``columns[i] = f(e_i)``)."""

    source: FDHopf
    target: FDHopf
    columns: dict = field(repr=False)

    def __post_init__(self):
        cols = {int(i): _clean(v) for i, v in self.columns.items()}
        if any(not 0 <= i < self.source.dim for i in cols):
            raise ValueError("column index outside the source dimension")
        if any(not 0 <= k < self.target.dim for v in cols.values() for k in v):
            raise ValueError("row index outside the target dimension")
        object.__setattr__(self, "columns", {i: v for i, v in cols.items() if v})

    @classmethod
    def from_matrix(cls, source: FDHopf, target: FDHopf, rows) -> HopfMap:
        """From a dense ``target.dim x source.dim`` matrix."""
        if len(rows) != target.dim or any(len(r) != source.dim for r in rows):
            raise ValueError(f"matrix must be {target.dim}x{source.dim}")
        cols = {i: {k: rows[k][i] for k in range(target.dim) if rows[k][i]} for i in range(source.dim)}
        return cls(source, target, cols)

    @classmethod
    def identity(cls, source: FDHopf, target: FDHopf | None = None) -> HopfMap:
        target = source if target is None else target
        if target.dim != source.dim:
            raise ValueError("identity between different dimensions")
        return cls(source, target, {i: {i: 1} for i in range(source.dim)})

    def __call__(self, x: Mapping) -> dict:
        out: dict = {}
        for i, a in x.items():
            v = self.columns.get(i)
            if v:
                _axpy(out, a, v)
        return out

    def tensor(self, t: Mapping) -> dict:
        """``(f (x) f)(t)``."""
        out: dict = {}
        for (a, b), c in t.items():
            for k, x in self.columns.get(a, {}).items():
                for l, y in self.columns.get(b, {}).items():
                    key = (k, l)
                    z = out.get(key, 0) + c * x * y
                    if z:
                        out[key] = z
                    else:
                        out.pop(key)
        return out

    def matrix(self) -> list[list[Fraction]]:
        rows = [[Fraction(0)] * self.source.dim for _ in range(self.target.dim)]
        for i, v in self.columns.items():
            for k, c in v.items():
                rows[k][i] = c
        return rows

    def transpose(self, source: FDHopf, target: FDHopf) -> HopfMap:
        """The transposed map between the given duals (``target' -> source'``)."""
        cols: dict = defaultdict(dict)
        for i, v in self.columns.items():
            for k, c in v.items():
                cols[k][i] = c
        return HopfMap(source, target, dict(cols))

    def __matmul__(self, other: HopfMap) -> HopfMap:
        return HopfMap(other.source, self.target, {i: self(v) for i, v in other.columns.items()})

    def same_matrix(self, other: HopfMap) -> bool:
        return self.columns == other.columns

    @cached_property
    def rank(self) -> int:
        return _linalg.rank(self.matrix())

    @property
    def is_injective(self) -> bool:
        return self.rank == self.source.dim

    @property
    def is_surjective(self) -> bool:
        return self.rank == self.target.dim

    def is_identity_matrix(self) -> bool:
        return self.source.dim == self.target.dim and self.columns == {i: {i: 1} for i in range(self.source.dim)}


def hopf_morphism_report(f: HopfMap) -> Report:
    A, B = f.source, f.target
    report = Report(f"Hopf morphism {A.name} -> {B.name}")
    anchor = ANCHORS["hopf_axioms"]
    rng = range(A.dim)
    e = A.basis

    def first(it):
        return next((w for w, ok in it if not ok), None)

    w = first(((i, j), f(A.m(e(i), e(j))) == B.m(f(e(i)), f(e(j)))) for i, j in itertools.product(rng, repeat=2))
    report.add("preserves product", w is None, anchor, witness=w and list(w))
    report.add("preserves unit", f(A.unit) == B.unit, anchor, witness=[])
    w = first(((i,), B.delta(f(e(i))) == f.tensor(A.comult.get(i, {}))) for i in rng)
    report.add("preserves coproduct", w is None, anchor, witness=w and list(w))
    w = first(((i,), B.eps(f(e(i))) == A.counit[i]) for i in rng)
    report.add("preserves counit", w is None, anchor, witness=w and list(w))
    w = first(((i,), f(A.S(e(i))) == B.S(f(e(i)))) for i in rng)
    report.add("commutes with antipode", w is None, anchor, witness=w and list(w))
    return report


def is_hopf_morphism(f: HopfMap) -> bool:
    return hopf_morphism_report(f).passed


def is_hopf_isomorphism(f: HopfMap) -> bool:
    return f.source.dim == f.target.dim and is_hopf_morphism(f) and f.rank == f.source.dim


def double_dual_canonical(H: FDHopf) -> HopfMap:
    """Evaluation ``H -> H''``; the identity matrix in dual-of-dual-basis coordinates."""
    return HopfMap.identity(H, dual_hopf(dual_hopf(H)))


def evaluation_pairing(G: FiniteGroup) -> HopfMap:
    """``C[G]' -> C^G``, sending a functional to its values on group elements.

    The dual basis vector of ``g`` evaluates to the indicator of ``g``.
    """
    A = dual_hopf(group_algebra_hopf(G))
    B = function_algebra_hopf(G)
    # <e_i*, e_g> = [i == g]
    return HopfMap(A, B, {i: {g: 1 for g in range(G.order) if g == i} for i in range(G.order)})


def group_hom_algebra_map(phi, source: FDHopf, target: FDHopf) -> HopfMap:
    """``C[phi]: C[G] -> C[H]`` for a group homomorphism given by its image list."""
    return HopfMap(source, target, {a: {b: 1} for a, b in enumerate(phi.images)})


# --------------------------------------------------------------------------
# spectrum of an abelian group algebra


@dataclass(frozen=True, eq=False)
class SpectrumPoint:
    """An algebra character of ``C[G]``, by its values on the group basis."""

    character: Element
    values: tuple

    def __call__(self, x: Mapping) -> Cyclotomic:
        total = Cyclotomic.rational(0)
        for i, c in x.items():
            total = total + self.values[i] * c
        return total


def _coordinates(G) -> FiniteAbelianGroup:
    if isinstance(G, FiniteAbelianGroup):
        return G
    if isinstance(G, FiniteGroup):
        if not G.is_abelian:
            raise NonAbelian(f"{G.name} is not abelian; its group algebra has too few characters")
        if G.abelian_coords is not None:
            return G.abelian_coords
        raise ValueError("abelian FiniteGroup without invariant-factor coordinates; build it with from_abelian")
    raise TypeError(f"expected a finite abelian group, got {type(G).__name__}")


def spectrum_abelian_group_algebra(G) -> list[SpectrumPoint]:
    """Characters ``g -> zeta(<g, chi>)`` of ``C[G]``, one per ``chi`` in the dual group.

    Values are kept in the conductor ``exponent(G)``.
    """
    A = _coordinates(G)
    m = A.exponent
    points = []
    for chi in dual_group(A).elements():
        vals = tuple(root_of_unity(m, (pair(g, chi).value * m).numerator) for g in A.elements())
        points.append(SpectrumPoint(chi, vals))
    return points


class _Roots:
    """Exact lookup of m-th roots of unity by coefficient vector.

    Once every value is identified as some ``zeta^k``, products are exponent
    sums; the table itself is checked against field multiplication once.
    """

    def __init__(self, m: int):
        self.m = m
        self.roots = [root_of_unity(m, k) for k in range(m)]
        self.index = {r.coeffs: k for k, r in enumerate(self.roots)}
        if len(self.index) != m:
            raise ArithmeticError(f"root table for m={m} has repeated entries")
        z = self.roots[1 % m]
        if any(self.key(z * r) != (k + 1) % m for k, r in enumerate(self.roots)):
            raise ArithmeticError(f"root table for m={m} is inconsistent with multiplication")

    def key(self, v: Cyclotomic):
        if self.m % v.conductor:
            return None
        return self.index.get(v.embed(self.m).coeffs)

    def mul(self, a: int, b: int) -> int:
        return (a + b) % self.m


@lru_cache(maxsize=16)
def _roots(m: int) -> _Roots:
    return _Roots(m)


def check_spectrum(G, points: list[SpectrumPoint] | None = None) -> Report:
    """Verify that the spectrum of ``C[G]`` is a group isomorphic to the dual group.

    Checks: count, unitality, multiplicativity on every basis pair,
    distinctness, linear independence (Gram matrix ``|G| * I``) and that
    pointwise products correspond to sums of characters.
    """
    A = _coordinates(G)
    anchor = ANCHORS["spectrum"]
    points = spectrum_abelian_group_algebra(A) if points is None else points
    H = group_algebra_hopf(from_abelian(A))
    report = Report(f"spectrum of C[{A}]")
    n = A.order
    roots = _roots(A.exponent)
    keys = [[roots.key(v) for v in p.values] for p in points]
    report.add("spectrum size", len(points) == n, anchor, witness={"size": len(points), "order": n})
    report.add("values are roots of unity", all(k is not None for row in keys for k in row), anchor, witness=None)
    if not report.passed:
        return report

    bad = next((p.character.coords for p in points if p(H.unit) != 1), None)
    report.add("unital", bad is None, anchor, witness=bad and list(bad))

    bad = None
    for p, row in zip(points, keys):
        for i, j in itertools.product(range(n), repeat=2):
            prod = H.mult[(i, j)]
            (k, c), = prod.items()
            if c != 1 or row[k] != roots.mul(row[i], row[j]):
                bad = {"chi": list(p.character.coords), "basis": [i, j]}
                break
        if bad:
            break
    report.add("multiplicative", bad is None, anchor, witness=bad)

    distinct = len({tuple(row) for row in keys}) == n
    report.add("pairwise distinct", distinct, anchor, witness=None)

    # Gram entries sum_g chi(g) * conj(psi(g)); conj(zeta^k) = zeta^-k
    m = roots.m
    bad = None
    sums: dict = {}
    for a, ra in enumerate(keys):
        for b, rb in enumerate(keys):
            counts = [0] * m
            for x, y in zip(ra, rb):
                counts[(x - y) % m] += 1
            counts = tuple(counts)
            if counts not in sums:
                sums[counts] = Cyclotomic.from_poly(m, counts)
            if sums[counts] != (n if a == b else 0):
                bad = [a, b]
                break
        if bad:
            break
    report.add("linearly independent", bad is None, anchor, witness=bad)

    by_char = {p.character: row for p, row in zip(points, keys)}
    bad = None
    for p, rp in zip(points, keys):
        for q, rq in zip(points, keys):
            target = by_char.get(p.character + q.character)
            if target is None or any(t != roots.mul(x, y) for t, x, y in zip(target, rp, rq)):
                bad = {"chi": list(p.character.coords), "psi": list(q.character.coords)}
                break
        if bad:
            break
    report.add("product is sum of characters", bad is None, anchor, witness=bad)
    return report
