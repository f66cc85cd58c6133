"""Locally constant functions on profinite towers.

A function on the limit of a :class:`~holodual.towers.ProGroup` that is
locally constant factors through some finite level ``G_n``; it is stored as
its table of values on ``G_n`` (elements in lexicographic order).  Values
are exact cyclotomic numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Mapping, Sequence

from . import _linalg
from .cyclo import Cyclotomic, character_sum
from .finab import Element, FiniteAbelianGroup, dual_group, dual_hom, pair, presentation_map
from .groups import FiniteGroup, direct_product
from .towers import ProElement, ProGroup

__all__ = [
    "LevelOutOfRange",
    "LocallyConstantFunction",
    "inflate",
    "minimal_level",
    "decompose_characters",
    "reconstruct",
    "character_function",
    "delta",
    "ProductGroup",
    "product_group",
    "TensorSplitting",
    "psi_iso",
]


class LevelOutOfRange(ValueError):
    pass


def _cyc(x) -> Cyclotomic:
    return x if isinstance(x, Cyclotomic) else Cyclotomic.rational(Fraction(x))


@dataclass(frozen=True, eq=False)
class LocallyConstantFunction:
    tower: ProGroup
    level: int
    table: tuple

    def __post_init__(self):
        if not 1 <= self.level <= self.tower.depth:
            raise LevelOutOfRange(f"level {self.level} outside 1..{self.tower.depth}")
        table = tuple(_cyc(x) for x in self.table)
        if len(table) != self.group.order:
            raise ValueError(f"table needs {self.group.order} values, got {len(table)}")
        object.__setattr__(self, "table", table)

    @property
    def group(self) -> FiniteAbelianGroup:
        return self.tower.level(self.level)

    def value(self, g: Element) -> Cyclotomic:
        return self.table[self.group.index(g)]

    def __call__(self, x: ProElement) -> Cyclotomic:
        return self.value(x.at(self.level))

    def __eq__(self, other) -> bool:
        if not isinstance(other, LocallyConstantFunction) or other.tower != self.tower:
            return NotImplemented
        top = max(self.level, other.level)
        a, b = inflate(self, top), inflate(other, top)
        return all(x == y for x, y in zip(a.table, b.table))

    __hash__ = None

    @classmethod
    def constant(cls, tower: ProGroup, value, level: int = 1) -> LocallyConstantFunction:
        return cls(tower, level, (value,) * tower.level(level).order)


def delta(tower: ProGroup, level: int, g: Element | None = None) -> LocallyConstantFunction:
    """Indicator of the coset of ``g`` (default: identity) at the given level."""
    G = tower.level(level)
    g = G.zero if g is None else g
    return LocallyConstantFunction(tower, level, tuple(int(x == g) for x in G.elements()))


def inflate(f: LocallyConstantFunction, m: int) -> LocallyConstantFunction:
    """The same function recorded at the finer level ``m``."""
    if not f.level <= m <= f.tower.depth:
        raise LevelOutOfRange(f"cannot inflate from level {f.level} to {m} (depth {f.tower.depth})")
    if m == f.level:
        return f
    proj = f.tower.projection(m, f.level)
    G = f.group
    return LocallyConstantFunction(f.tower, m, tuple(f.table[G.index(proj(g))] for g in f.tower.level(m).elements()))


def minimal_level(f: LocallyConstantFunction) -> int:
    """Smallest level through which ``f`` factors (constant on every fiber)."""
    Gn = f.group
    elements = list(Gn.elements())
    for k in range(1, f.level + 1):
        proj = f.tower.projection(f.level, k)
        seen: dict = {}
        for g, v in zip(elements, f.table):
            key = proj(g)
            if key in seen:
                if seen[key] != v:
                    break
            else:
                seen[key] = v
        else:
            return k
    return f.level


@lru_cache(maxsize=None)
def _exponents(G: FiniteAbelianGroup) -> tuple[tuple[int, ...], ...]:
    """``K[g][chi]`` with ``<g, chi> = K / exponent(G)``."""
    m = G.exponent
    D = dual_group(G)
    return tuple(tuple((pair(g, chi).value * m).numerator for chi in D.elements()) for g in G.elements())


def decompose_characters(f: LocallyConstantFunction) -> dict[Element, Cyclotomic]:
    """Coefficients ``c_chi = |G|^-1 sum_g f(g) zeta(-<g, chi>)`` over the characters of ``G_level``.

    Keys are elements of the dual group, in lexicographic order.
    """
    G = f.group
    K = _exponents(G)
    m = G.exponent
    out = {}
    for c, chi in enumerate(dual_group(G).elements()):
        s = character_sum(m, ((v, -K[g][c]) for g, v in enumerate(f.table)))
        out[chi] = s * Fraction(1, G.order)
    return out


def reconstruct(coeffs: Mapping[Element, Cyclotomic], tower: ProGroup, level: int) -> LocallyConstantFunction:
    """``sum_chi c_chi * zeta(<., chi>)`` as a function at the given level."""
    G = tower.level(level)
    D = dual_group(G)
    K = _exponents(G)
    m = G.exponent
    cs = [(D.index(chi), _cyc(c)) for chi, c in coeffs.items()]
    table = tuple(character_sum(m, ((c, K[g][j]) for j, c in cs)) for g in range(G.order))
    return LocallyConstantFunction(tower, level, table)


def character_function(tower: ProGroup, level: int, chi: Element) -> LocallyConstantFunction:
    """The character ``g -> zeta(<g, chi>)`` as a locally constant function."""
    G = tower.level(level)
    if chi.group != dual_group(G):
        raise ValueError(f"{chi} is not a character of {G}")
    return reconstruct({chi: Cyclotomic.rational(1)}, tower, level)


def pullback_character(tower: ProGroup, n: int, m: int, chi: Element) -> Element:
    """``chi o pi`` for the projection ``G_m -> G_n``."""
    return dual_hom(tower.projection(m, n))(chi)


# --------------------------------------------------------------------------
# functions on products


@dataclass(frozen=True, eq=False)
class ProductGroup:
    """``A x B`` with its own coordinates and the bijection to pairs.

    Abelian factors are combined into invariant-factor form, so the element
    order of the product is generally not the naive pair order.
    """

    left: object
    right: object
    group: object
    pairs: tuple  # product index -> (left index, right index)

    def index_of(self, a: int, b: int) -> int:
        return self._lookup[a, b]

    @cached_property
    def _lookup(self) -> dict:
        return {p: i for i, p in enumerate(self.pairs)}

    def mul(self, i: int, j: int) -> int:
        G = self.group
        if isinstance(G, FiniteGroup):
            return G.mul(i, j)
        return G.index(G.element_at(i) + G.element_at(j))


def _order(X) -> int:
    return X.order


def product_group(A, B) -> ProductGroup:
    if isinstance(A, FiniteAbelianGroup) and isinstance(B, FiniteAbelianGroup):
        factors = A.invariant_factors + B.invariant_factors
        k = len(factors)
        if k == 0:
            return ProductGroup(A, B, FiniteAbelianGroup(()), ((0, 0),))
        G, P = presentation_map([[factors[i] if i == j else 0 for j in range(k)] for i in range(k)], k)
        pairs = [None] * G.order
        for a in A.elements():
            for b in B.elements():
                y = a.coords + b.coords
                coords = [sum(y[r] * P[r][c] for r in range(k)) for c in range(G.rank)]
                pairs[G.index(G(coords))] = (A.index(a), B.index(b))
        if any(p is None for p in pairs):
            raise ArithmeticError("coordinate change of the product is not bijective")
        return ProductGroup(A, B, G, tuple(pairs))
    if isinstance(A, FiniteGroup) and isinstance(B, FiniteGroup):
        G = direct_product(A, B)
        return ProductGroup(A, B, G, tuple((i // B.order, i % B.order) for i in range(G.order)))
    raise TypeError("both factors must be finite abelian groups or both finite groups")


@dataclass(frozen=True, eq=False)
class TensorSplitting:
    """The linear isomorphism ``C^A (x) C^B -> C^(A x B)``, ``delta_a (x) delta_b -> delta_(a,b)``.

    Tensors are coefficient matrices ``T[a][b]`` in the basis ``delta_a (x) delta_b``;
    functions on the product are tables in the product's element order.
    """

    product: ProductGroup

    @property
    def shape(self) -> tuple[int, int]:
        return _order(self.product.left), _order(self.product.right)

    def __call__(self, T: Sequence[Sequence]) -> tuple:
        return tuple(T[a][b] for a, b in self.product.pairs)

    def elementary(self, f: Sequence, h: Sequence) -> tuple:
        """Image of ``f (x) h``: the function ``(a, b) -> f(a) h(b)``."""
        return tuple(f[a] * h[b] for a, b in self.product.pairs)

    def inverse(self, F: Sequence) -> list[list]:
        p, q = self.shape
        T = [[None] * q for _ in range(p)]
        for i, (a, b) in enumerate(self.product.pairs):
            T[a][b] = F[i]
        return T

    def matrix(self) -> list[list[int]]:
        """Rows: product elements; columns: ``delta_a (x) delta_b`` at ``a * |B| + b``."""
        p, q = self.shape
        N = p * q
        rows = [[0] * N for _ in range(N)]
        for i, (a, b) in enumerate(self.product.pairs):
            rows[i][a * q + b] = 1
        return rows

    def rank(self) -> int:
        return _linalg.rank(self.matrix())


def psi_iso(A, B) -> TensorSplitting:
    return TensorSplitting(product_group(A, B))
