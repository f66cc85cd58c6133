"""Finite groups given by multiplication tables, and their homomorphisms."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from .finab import FiniteAbelianGroup

__all__ = [
    "InvalidGroupTable",
    "InvalidGroupHom",
    "FiniteGroup",
    "GroupHom",
    "cyclic_group",
    "dihedral",
    "symmetric",
    "alternating",
    "quaternion8",
    "klein4",
    "direct_product",
    "from_abelian",
    "group_from_literal",
]


class InvalidGroupTable(ValueError):
    pass


class InvalidGroupHom(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """Group on ``{0, ..., n-1}`` with ``table[a][b] = a * b``.

    Group axioms are verified exhaustively on construction.
    """

    table: tuple[tuple[int, ...], ...]
    name: str = "G"
    labels: tuple | None = None
    abelian_coords: FiniteAbelianGroup | None = field(default=None, repr=False)

    def __post_init__(self):
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        object.__setattr__(self, "table", table)
        n = len(table)
        if n == 0:
            raise InvalidGroupTable("empty group")
        if any(len(row) != n for row in table):
            raise InvalidGroupTable("multiplication table must be square")
        if any(not 0 <= x < n for row in table for x in row):
            raise InvalidGroupTable("table entry out of range")
        e = next((a for a in range(n) if all(table[a][b] == b == table[b][a] for b in range(n))), None)
        if e is None:
            raise InvalidGroupTable("no identity element")
        inv = []
        for a in range(n):
            b = next((b for b in range(n) if table[a][b] == e), None)
            if b is None or table[b][a] != e:
                raise InvalidGroupTable(f"element {a} has no two-sided inverse")
            inv.append(b)
        for a, b, c in itertools.product(range(n), repeat=3):
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise InvalidGroupTable(f"associativity fails at {(a, b, c)}")
        object.__setattr__(self, "identity", e)
        object.__setattr__(self, "inverse", tuple(inv))

    @property
    def order(self) -> int:
        return len(self.table)

    def __len__(self) -> int:
        return self.order

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(a))

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteGroup) and other.table == self.table

    def __hash__(self) -> int:
        return hash(self.table)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, eq=False)
class GroupHom:
    source: FiniteGroup
    target: FiniteGroup
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        S, T = self.source, self.target
        if len(images) != S.order or any(not 0 <= x < T.order for x in images):
            raise InvalidGroupHom("image list does not match the groups")
        for a, b in itertools.product(range(S.order), repeat=2):
            if images[S.mul(a, b)] != T.mul(images[a], images[b]):
                raise InvalidGroupHom(f"not a homomorphism at {(a, b)}")

    def __call__(self, a: int) -> int:
        return self.images[a]

    def __matmul__(self, other: GroupHom) -> GroupHom:
        return GroupHom(other.source, self.target, tuple(self.images[x] for x in other.images))

    @property
    def is_injective(self) -> bool:
        return len(set(self.images)) == self.source.order

    @property
    def is_surjective(self) -> bool:
        return len(set(self.images)) == self.target.order

    def fiber(self, b: int) -> list[int]:
        return [a for a, x in enumerate(self.images) if x == b]


def _from_elements(elements, op, name, labels=None) -> FiniteGroup:
    index = {x: i for i, x in enumerate(elements)}
    table = [[index[op(a, b)] for b in elements] for a in elements]
    return FiniteGroup(table, name, tuple(labels if labels is not None else elements))


def cyclic_group(n: int) -> FiniteGroup:
    return _from_elements(list(range(n)), lambda a, b: (a + b) % n, f"Z/{n}")


def _compose(p, q):
    return tuple(p[i] for i in q)


def symmetric(n: int) -> FiniteGroup:
    """Permutations of ``range(n)`` in lexicographic order; ``(p q)(i) = p(q(i))``."""
    return _from_elements(list(itertools.permutations(range(n))), _compose, f"S_{n}")


def _sign(p) -> int:
    s = 1
    for i, j in itertools.combinations(range(len(p)), 2):
        if p[i] > p[j]:
            s = -s
    return s


def alternating(n: int) -> FiniteGroup:
    perms = [p for p in itertools.permutations(range(n)) if _sign(p) == 1]
    return _from_elements(perms, _compose, f"A_{n}")


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the regular ``n``-gon, order ``2n``; elements ``(k, s)`` mean ``r^k f^s``."""
    elements = [(k, s) for s in range(2) for k in range(n)]
    op = lambda a, b: ((a[0] + (-1) ** a[1] * b[0]) % n, (a[1] + b[1]) % 2)
    return _from_elements(elements, op, f"D_{n}")


_QUAT = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def quaternion8() -> FiniteGroup:
    elements = [(s, u) for s in (1, -1) for u in "1ijk"]

    def op(a, b):
        s, u = _QUAT[a[1], b[1]]
        return (a[0] * b[0] * s, u)

    labels = [("" if s == 1 else "-") + u for s, u in elements]
    return _from_elements(elements, op, "Q_8", labels)


def klein4() -> FiniteGroup:
    return from_abelian(FiniteAbelianGroup((2, 2)))


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """``G x H`` with element ``(g, h)`` at index ``g * |H| + h``."""
    m = H.order
    table = [
        [G.mul(a // m, b // m) * m + H.mul(a % m, b % m) for b in range(G.order * m)]
        for a in range(G.order * m)
    ]
    return FiniteGroup(table, f"{G.name}x{H.name}")


def from_abelian(A: FiniteAbelianGroup) -> FiniteGroup:
    """Table of ``A`` with elements in its lexicographic enumeration."""
    elements = list(A.elements())
    table = [[A.index(a + b) for b in elements] for a in elements]
    return FiniteGroup(table, str(A), tuple(e.coords for e in elements), A)


def group_from_literal(text: str) -> FiniteGroup:
    """Named builders: ``cyclic:n``, ``dihedral:n``, ``symmetric:n``,
    ``alternating:n``, ``quaternion8``, ``klein4``."""
    name, _, arg = text.partition(":")
    builders = {"cyclic": cyclic_group, "dihedral": dihedral, "symmetric": symmetric, "alternating": alternating}
    if name in ("quaternion8", "klein4") and not arg:
        return quaternion8() if name == "quaternion8" else klein4()
    if name in builders and arg.isdigit() and int(arg) >= 1:
        return builders[name](int(arg))
    raise ValueError(f"unknown group literal {text!r}")
