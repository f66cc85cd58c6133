"""Finite abelian groups in invariant-factor form and their character duals.

Groups are stored by their invariant factors ``d_1 | d_2 | ... | d_k`` and
elements by coordinate tuples ``(g_1, ..., g_k)`` with ``0 <= g_j < d_j``.
Characters are not stored as tables: an element ``chi`` of the dual group uses
the same coordinates and acts through the pairing

    <g, chi> = sum_j g_j * chi_j / d_j   (mod 1)

so character values live in Q/Z and ``zeta`` (see :mod:`holodual.cyclo`)
turns them into roots of unity on demand.

Homomorphisms ``G -> H`` are integer matrices with one row per invariant
factor of ``H`` and one column per invariant factor of ``G``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, reduce
from typing import Iterator, Sequence

__all__ = [
    "InfiniteCokernel",
    "InvalidGroup",
    "InvalidHom",
    "FiniteAbelianGroup",
    "DualGroup",
    "Element",
    "Hom",
    "QmodZ",
    "smith_normal_form",
    "from_presentation",
    "presentation_map",
    "abelian_group",
    "cyclic",
    "dual_group",
    "pair",
    "dual_hom",
    "evaluation_map",
    "is_isomorphism",
    "image_order",
    "kernel_order",
    "brute_kernel",
    "brute_image",
    "BRUTE_FORCE_LIMIT",
]

# Orders up to this bound are checked by enumerating elements.
BRUTE_FORCE_LIMIT = 10_000


class InvalidGroup(ValueError):
    pass


class InvalidHom(ValueError):
    pass


class InfiniteCokernel(ValueError):
    pass


Matrix = list[list[int]]


# --------------------------------------------------------------------------
# Smith normal form


def _identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _snf(M: Sequence[Sequence[int]]):
    """Return ``(U, D, V, Uinv, Vinv)`` with ``M == U @ D @ V``."""
    D = [list(map(int, row)) for row in M]
    m = len(D)
    n = len(D[0]) if m else 0
    if any(len(row) != n for row in D):
        raise ValueError("ragged matrix")
    U, Uinv = _identity(m), _identity(m)
    V, Vinv = _identity(n), _identity(n)

    # Every row operation D <- E D is mirrored by U <- U E^-1, Uinv <- E Uinv;
    # every column operation D <- D F by V <- F^-1 V, Vinv <- Vinv F.
    def row_add(src, dst, c):  # row dst += c * row src
        if not c:
            return
        for k in range(n):
            D[dst][k] += c * D[src][k]
        for k in range(m):
            U[k][src] -= c * U[k][dst]
            Uinv[dst][k] += c * Uinv[src][k]

    def row_swap(i, j):
        if i == j:
            return
        D[i], D[j] = D[j], D[i]
        Uinv[i], Uinv[j] = Uinv[j], Uinv[i]
        for row in U:
            row[i], row[j] = row[j], row[i]

    def row_neg(i):
        D[i] = [-x for x in D[i]]
        Uinv[i] = [-x for x in Uinv[i]]
        for row in U:
            row[i] = -row[i]

    def col_add(src, dst, c):  # column dst += c * column src
        if not c:
            return
        for row in D:
            row[dst] += c * row[src]
        for k in range(n):
            V[src][k] -= c * V[dst][k]
        for row in Vinv:
            row[dst] += c * row[src]

    def col_swap(i, j):
        if i == j:
            return
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in Vinv:
            row[i], row[j] = row[j], row[i]
        V[i], V[j] = V[j], V[i]

    for t in range(min(m, n)):
        while True:
            pivot = None
            for i in range(t, m):
                for j in range(t, n):
                    if D[i][j] and (pivot is None or abs(D[i][j]) < abs(D[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                return U, D, V, Uinv, Vinv
            row_swap(t, pivot[0])
            col_swap(t, pivot[1])
            p = D[t][t]
            dirty = False
            for i in range(t + 1, m):
                row_add(t, i, -(D[i][t] // p))
                dirty |= D[i][t] != 0
            for j in range(t + 1, n):
                col_add(t, j, -(D[t][j] // p))
                dirty |= D[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            row_add(bad, t, 1)
        if D[t][t] < 0:
            row_neg(t)
    return U, D, V, Uinv, Vinv


def smith_normal_form(M: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form ``M = U D V`` over the integers.

    ``U`` and ``V`` are unimodular and ``D`` is diagonal with nonnegative
    entries ``d_1 | d_2 | ...`` (zeros last).

    >>> smith_normal_form([[2, 4], [6, 8]])[1]
    [[2, 0], [0, 4]]
    """
    U, D, V, _, _ = _snf(M)
    return U, D, V


def _diagonal(D: Matrix) -> list[int]:
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


def presentation_map(relations: Sequence[Sequence[int]], ngens: int | None = None):
    """Cokernel of a relation matrix together with its coordinate map.

    Rows of ``relations`` are relations among ``ngens`` generators.  Returns
    ``(G, P)`` where ``P`` is an ``ngens x len(G.invariant_factors)`` integer
    matrix: the generator vector ``y`` maps to ``y @ P`` reduced by ``G``.
    """
    rows = [list(r) for r in relations]
    if ngens is None:
        if not rows:
            raise ValueError("cannot infer the number of generators")
        ngens = len(rows[0])
    if not rows:
        if ngens:
            raise InfiniteCokernel(f"{ngens} free generators")
        return FiniteAbelianGroup(()), []
    _, D, _, _, Vinv = _snf(rows)
    diag = _diagonal(D) + [0] * max(0, ngens - len(rows))
    if any(d == 0 for d in diag):
        raise InfiniteCokernel(f"cokernel has free rank {diag.count(0)}")
    keep = [i for i, d in enumerate(diag) if d > 1]
    G = FiniteAbelianGroup(tuple(diag[i] for i in keep))
    P = [[Vinv[r][i] % diag[i] for i in keep] for r in range(ngens)]
    return G, P


def from_presentation(relations: Sequence[Sequence[int]]) -> FiniteAbelianGroup:
    """Finite abelian group presented by integer relations (one per row).

    >>> from_presentation([[2, 0], [0, 3]]).invariant_factors
    (6,)
    """
    return presentation_map(relations)[0]


def abelian_group(*orders: int) -> FiniteAbelianGroup:
    """``Z/n_1 + Z/n_2 + ...`` brought into invariant-factor form."""
    if not orders:
        return FiniteAbelianGroup(())
    n = len(orders)
    return from_presentation([[orders[i] if i == j else 0 for j in range(n)] for i in range(n)])


def cyclic(n: int) -> FiniteAbelianGroup:
    return abelian_group(n)


# --------------------------------------------------------------------------
# groups and elements


@dataclass(frozen=True)
class FiniteAbelianGroup:
    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        factors = tuple(int(d) for d in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", factors)
        for d in factors:
            if d < 2:
                raise InvalidGroup(f"invariant factor {d} < 2")
        for a, b in zip(factors, factors[1:]):
            if b % a:
                raise InvalidGroup(f"divisibility chain violated: {a} does not divide {b}")

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @cached_property
    def order(self) -> int:
        return math.prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    @property
    def is_dual(self) -> bool:
        return False

    def __len__(self) -> int:
        return self.order

    def __call__(self, *coords: int) -> Element:
        if len(coords) == 1 and isinstance(coords[0], (tuple, list)):
            coords = tuple(coords[0])
        return Element(self, tuple(coords))

    @property
    def zero(self) -> Element:
        return Element(self, (0,) * self.rank)

    def generators(self) -> list[Element]:
        return [Element(self, tuple(int(i == j) for j in range(self.rank))) for i in range(self.rank)]

    def elements(self) -> Iterator[Element]:
        """All elements, lexicographic in the coordinates."""
        for coords in itertools.product(*(range(d) for d in self.invariant_factors)):
            yield Element(self, coords)

    def index(self, g: Element) -> int:
        """Position of ``g`` in :meth:`elements`."""
        i = 0
        for c, d in zip(g.coords, self.invariant_factors):
            i = i * d + c
        return i

    def element_at(self, index: int) -> Element:
        coords = []
        for d in reversed(self.invariant_factors):
            index, c = divmod(index, d)
            coords.append(c)
        return Element(self, tuple(reversed(coords)))

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "0"
        return " + ".join(f"Z/{d}" for d in self.invariant_factors)


@dataclass(frozen=True)
class DualGroup(FiniteAbelianGroup):
    """Character group of ``primal``; same invariant factors, different tag."""

    primal: FiniteAbelianGroup = field(default=None, compare=True)

    def __post_init__(self):
        super().__post_init__()
        if self.primal is None or self.primal.invariant_factors != self.invariant_factors:
            raise InvalidGroup("dual group must carry the primal's invariant factors")

    @property
    def is_dual(self) -> bool:
        return True

    def __str__(self) -> str:
        return f"dual({self.primal})"


@dataclass(frozen=True)
class Element:
    group: FiniteAbelianGroup
    coords: tuple[int, ...]

    def __post_init__(self):
        factors = self.group.invariant_factors
        if len(self.coords) != len(factors):
            raise ValueError(f"expected {len(factors)} coordinates, got {len(self.coords)}")
        object.__setattr__(self, "coords", tuple(int(c) % d for c, d in zip(self.coords, factors)))

    def _check(self, other: Element):
        if other.group != self.group:
            raise ValueError("elements of different groups")

    def __add__(self, other: Element) -> Element:
        self._check(other)
        return Element(self.group, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Element) -> Element:
        self._check(other)
        return Element(self.group, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> Element:
        return Element(self.group, tuple(-a for a in self.coords))

    def __mul__(self, n: int) -> Element:
        return Element(self.group, tuple(n * a for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def order(self) -> int:
        return reduce(math.lcm, (d // math.gcd(d, c) for c, d in zip(self.coords, self.group.invariant_factors)), 1)

    def __repr__(self) -> str:
        return f"{self.coords}"


@dataclass(frozen=True, order=True)
class QmodZ:
    """A rational number modulo 1, kept as ``p/q`` with ``0 <= p < q``."""

    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value) % 1)

    @property
    def numerator(self) -> int:
        return self.value.numerator

    @property
    def denominator(self) -> int:
        return self.value.denominator

    def __add__(self, other: QmodZ) -> QmodZ:
        return QmodZ(self.value + QmodZ._coerce(other).value)

    def __sub__(self, other: QmodZ) -> QmodZ:
        return QmodZ(self.value - QmodZ._coerce(other).value)

    def __neg__(self) -> QmodZ:
        return QmodZ(-self.value)

    def __mul__(self, n: int) -> QmodZ:
        return QmodZ(self.value * n)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return self.value != 0

    @staticmethod
    def _coerce(x) -> QmodZ:
        return x if isinstance(x, QmodZ) else QmodZ(Fraction(x))

    def __eq__(self, other) -> bool:
        if isinstance(other, QmodZ):
            return self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == Fraction(other) % 1
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __str__(self) -> str:
        return str(self.value)


# --------------------------------------------------------------------------
# homomorphisms


@dataclass(frozen=True)
class Hom:
    source: FiniteAbelianGroup
    target: FiniteAbelianGroup
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        d = self.source.invariant_factors
        e = self.target.invariant_factors
        rows = tuple(tuple(int(x) for x in row) for row in self.matrix)
        if len(rows) != len(e) or any(len(row) != len(d) for row in rows):
            raise InvalidHom(f"matrix shape must be {len(e)}x{len(d)}")
        rows = tuple(tuple(x % e[i] for x in row) for i, row in enumerate(rows))
        for i, row in enumerate(rows):
            for j, a in enumerate(row):
                if (a * d[j]) % e[i]:
                    raise InvalidHom(
                        f"entry ({i},{j}) = {a} not well defined: {e[i]} does not divide {a}*{d[j]}"
                    )
        object.__setattr__(self, "matrix", rows)

    @classmethod
    def identity(cls, G: FiniteAbelianGroup) -> Hom:
        return cls(G, G, _identity(G.rank))

    @classmethod
    def zero(cls, G: FiniteAbelianGroup, H: FiniteAbelianGroup) -> Hom:
        return cls(G, H, [[0] * G.rank for _ in range(H.rank)])

    def __call__(self, g: Element) -> Element:
        if g.group != self.source:
            raise ValueError(f"element of {g.group} passed to hom from {self.source}")
        return Element(self.target, tuple(sum(a * x for a, x in zip(row, g.coords)) for row in self.matrix))

    def __matmul__(self, other: Hom) -> Hom:
        """Composition ``self o other``."""
        if other.target != self.source:
            raise InvalidHom("maps are not composable")
        inner = range(self.source.rank)
        rows = [
            [sum(self.matrix[i][k] * other.matrix[k][j] for k in inner) for j in range(other.source.rank)]
            for i in range(self.target.rank)
        ]
        return Hom(other.source, self.target, rows)

    def __repr__(self) -> str:
        return f"Hom({self.source} -> {self.target}, {[list(r) for r in self.matrix]})"


def dual_group(G: FiniteAbelianGroup) -> DualGroup:
    return DualGroup(G.invariant_factors, G)


def pair(g: Element, chi: Element) -> QmodZ:
    """Value of the character ``chi`` at ``g``, as an element of Q/Z."""
    G = g.group
    if not (chi.group.is_dual and chi.group.primal == G):
        raise ValueError(f"character of {chi.group} cannot be paired with an element of {G}")
    return QmodZ(sum(Fraction(a * b, d) for a, b, d in zip(g.coords, chi.coords, G.invariant_factors)))


def dual_hom(f: Hom) -> Hom:
    """Transpose ``dual(target) -> dual(source)`` of ``f``.

    Characterised by ``pair(g, dual_hom(f)(eta)) == pair(f(g), eta)``.
    """
    d = f.source.invariant_factors
    e = f.target.invariant_factors
    rows = [[(f.matrix[i][j] * d[j] // e[i]) % d[j] for i in range(len(e))] for j in range(len(d))]
    return Hom(dual_group(f.target), dual_group(f.source), rows)


def evaluation_map(G: FiniteAbelianGroup) -> Hom:
    """``g -> (chi -> chi(g))`` from ``G`` into its double dual."""
    return Hom(G, dual_group(dual_group(G)), _identity(G.rank))


# --------------------------------------------------------------------------
# kernels, images, isomorphisms


def image_order(f: Hom) -> int:
    """Order of the image of ``f``, from the cokernel ``H / f(G)``."""
    e = f.target.invariant_factors
    if not e:
        return 1
    rel = [[e[i] if i == k else 0 for k in range(len(e))] for i in range(len(e))]
    rel += [[f.matrix[i][j] for i in range(len(e))] for j in range(f.source.rank)]
    _, D, _ = smith_normal_form(rel)
    return f.target.order // math.prod(_diagonal(D))


def kernel_order(f: Hom) -> int:
    return f.source.order // image_order(f)


def brute_kernel(f: Hom) -> list[Element]:
    return [g for g in f.source.elements() if f(g).is_zero()]


def brute_image(f: Hom) -> set[Element]:
    return {f(g) for g in f.source.elements()}


def is_injective(f: Hom) -> bool:
    if f.source.order <= BRUTE_FORCE_LIMIT:
        return all(g.is_zero() for g in brute_kernel(f))
    return kernel_order(f) == 1


def is_surjective(f: Hom) -> bool:
    if f.source.order <= BRUTE_FORCE_LIMIT:
        return len(brute_image(f)) == f.target.order
    return image_order(f) == f.target.order


def is_isomorphism(f: Hom) -> bool:
    if f.source.order != f.target.order:
        return False
    return image_order(f) == f.target.order
