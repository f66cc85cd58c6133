"""Locally finite and profinite abelian groups as finite-depth towers.

An :class:`IndGroup` is a chain ``G_1 -> G_2 -> ... -> G_N`` of injections
(a truncation of a countable locally finite group); a :class:`ProGroup` is a
chain ``G_N -> ... -> G_1`` of surjections (a truncation of a profinite
group with countable base).  Levels are numbered from 1, as are transitions:
transition ``n`` connects levels ``n`` and ``n + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .finab import (
    DualGroup,
    Element,
    FiniteAbelianGroup,
    Hom,
    abelian_group,
    dual_group,
    dual_hom,
    evaluation_map,
    is_injective,
    is_isomorphism,
    is_surjective,
    pair,
)
from .report import ANCHORS, Report

__all__ = [
    "InvalidTower",
    "NotPrime",
    "BadDepth",
    "IndGroup",
    "ProGroup",
    "IndElement",
    "ProElement",
    "dual_ind",
    "dual_pro",
    "reflexivity_check_ind",
    "reflexivity_check_pro",
    "pruefer",
    "padic",
    "direct_sum_tower",
    "product_pro",
    "factorial_ind",
    "group_to_json",
    "tower_to_json",
]


class InvalidTower(ValueError):
    pass


class NotPrime(ValueError):
    pass


class BadDepth(ValueError):
    pass


def _compose(maps: list[Hom], G: FiniteAbelianGroup) -> Hom:
    return reduce(lambda acc, f: f @ acc, maps, Hom.identity(G))


@dataclass(frozen=True)
class IndGroup:
    levels: tuple[FiniteAbelianGroup, ...]
    transitions: tuple[Hom, ...]
    name: str = "ind"

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(self.levels))
        object.__setattr__(self, "transitions", tuple(self.transitions))
        _check_shape(self, up=True)
        for n, t in enumerate(self.transitions, 1):
            if not is_injective(t):
                raise InvalidTower(f"transition {n} -> {n + 1} is not injective")

    @property
    def depth(self) -> int:
        return len(self.levels)

    def level(self, n: int) -> FiniteAbelianGroup:
        return self.levels[_index(self, n)]

    def transition(self, n: int) -> Hom:
        """The injection ``G_n -> G_{n+1}``."""
        return self.transitions[_index(self, n, transition=True)]

    def push(self, n: int, m: int) -> Hom:
        """Composite ``G_n -> G_m`` for ``n <= m``."""
        if m < n:
            raise ValueError("ind towers only push upwards")
        _index(self, n), _index(self, m)
        return _compose(list(self.transitions[n - 1 : m - 1]), self.level(n))

    def element(self, n: int, coords) -> IndElement:
        return IndElement(self, n, self.level(n)(tuple(coords)))

    def truncate(self, depth: int) -> IndGroup:
        if not 1 <= depth <= self.depth:
            raise BadDepth(f"cannot truncate depth {self.depth} tower to {depth}")
        return IndGroup(self.levels[:depth], self.transitions[: depth - 1], self.name)


@dataclass(frozen=True)
class ProGroup:
    levels: tuple[FiniteAbelianGroup, ...]
    transitions: tuple[Hom, ...]
    name: str = "pro"

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(self.levels))
        object.__setattr__(self, "transitions", tuple(self.transitions))
        _check_shape(self, up=False)
        for n, t in enumerate(self.transitions, 1):
            if not is_surjective(t):
                raise InvalidTower(f"transition {n + 1} -> {n} is not surjective")

    @property
    def depth(self) -> int:
        return len(self.levels)

    def level(self, n: int) -> FiniteAbelianGroup:
        return self.levels[_index(self, n)]

    def transition(self, n: int) -> Hom:
        """The surjection ``G_{n+1} -> G_n``."""
        return self.transitions[_index(self, n, transition=True)]

    def projection(self, m: int, n: int) -> Hom:
        """Composite ``G_m -> G_n`` for ``m >= n``."""
        if m < n:
            raise ValueError("pro towers only project downwards")
        _index(self, n), _index(self, m)
        return _compose(list(reversed(self.transitions[n - 1 : m - 1])), self.level(m))

    def element(self, coords) -> ProElement:
        """Coherent element determined by its top-level coordinates."""
        top = self.level(self.depth)(tuple(coords))
        comps = [self.projection(self.depth, n)(top) for n in range(1, self.depth + 1)]
        return ProElement(self, tuple(comps))

    def truncate(self, depth: int) -> ProGroup:
        if not 1 <= depth <= self.depth:
            raise BadDepth(f"cannot truncate depth {self.depth} tower to {depth}")
        return ProGroup(self.levels[:depth], self.transitions[: depth - 1], self.name)


def _index(tower, n: int, transition: bool = False) -> int:
    top = tower.depth - 1 if transition else tower.depth
    if not 1 <= n <= top:
        raise IndexError(f"level {n} outside 1..{top}")
    return n - 1


def _check_shape(tower, up: bool) -> None:
    if not tower.levels:
        raise BadDepth("a tower needs at least one level")
    if len(tower.transitions) != len(tower.levels) - 1:
        raise InvalidTower(f"{len(tower.levels)} levels need {len(tower.levels) - 1} transitions")
    for n, t in enumerate(tower.transitions, 1):
        lo, hi = tower.levels[n - 1], tower.levels[n]
        src, dst = (lo, hi) if up else (hi, lo)
        if t.source != src or t.target != dst:
            raise InvalidTower(f"transition {n} does not connect levels {n} and {n + 1}")


@dataclass(frozen=True, eq=False)
class IndElement:
    tower: IndGroup
    level: int
    value: Element

    def push(self, m: int) -> IndElement:
        return IndElement(self.tower, m, self.tower.push(self.level, m)(self.value))

    def __eq__(self, other) -> bool:
        if not isinstance(other, IndElement) or other.tower != self.tower:
            return NotImplemented
        top = max(self.level, other.level)
        return self.push(top).value == other.push(top).value

    def __hash__(self) -> int:
        return hash(self.push(self.tower.depth).value)


@dataclass(frozen=True)
class ProElement:
    tower: ProGroup
    components: tuple[Element, ...]

    def __post_init__(self):
        if len(self.components) != self.tower.depth:
            raise ValueError("a pro element needs one component per level")
        for n in range(1, self.tower.depth):
            if self.tower.transition(n)(self.components[n]) != self.components[n - 1]:
                raise ValueError(f"components at levels {n} and {n + 1} are not coherent")

    def at(self, n: int) -> Element:
        return self.components[n - 1]


# --------------------------------------------------------------------------
# duality


def dual_ind(G: IndGroup) -> ProGroup:
    """Level-wise character groups; injections dualise to surjections."""
    return ProGroup(
        tuple(dual_group(L) for L in G.levels),
        tuple(dual_hom(t) for t in G.transitions),
        f"dual({G.name})",
    )


def dual_pro(G: ProGroup) -> IndGroup:
    """Level-wise character groups; surjections dualise to injections."""
    return IndGroup(
        tuple(dual_group(L) for L in G.levels),
        tuple(dual_hom(t) for t in G.transitions),
        f"dual({G.name})",
    )


def _first_difference(f: Hom, g: Hom):
    for i, (r, s) in enumerate(zip(f.matrix, g.matrix)):
        for j, (a, b) in enumerate(zip(r, s)):
            if a != b:
                return {"entry": [i, j], "left": a, "right": b}
    return None


def _level_checks(report: Report, n: int, G: FiniteAbelianGroup, GG: FiniteAbelianGroup) -> None:
    anchor = ANCHORS["abelian_reflexivity"]
    iota = evaluation_map(G)
    report.add("double dual level", GG == iota.target, anchor, n, {"expected": str(iota.target), "got": str(GG)})
    report.add("order preserved", GG.order == G.order, anchor, n, {"order": G.order, "double_dual_order": GG.order})
    report.add("evaluation is isomorphism", is_isomorphism(iota), anchor, n, {"matrix": [list(r) for r in iota.matrix]})
    # both sides are biadditive, so agreement on generators is agreement everywhere
    D = dual_group(G)
    bad = None
    for g in G.generators():
        for chi in D.generators():
            if pair(chi, iota(g)) != pair(g, chi):
                bad = {"g": list(g.coords), "chi": list(chi.coords)}
                break
        if bad:
            break
    report.add("evaluation pairing", bad is None, anchor, n, bad)


def reflexivity_check_ind(G: IndGroup) -> Report:
    """Verify ``iota: G -> G**`` level by level for a locally finite tower."""
    report = Report(f"reflexivity of ind tower {G.name} (depth {G.depth})")
    DD = dual_pro(dual_ind(G))
    for n in range(1, G.depth + 1):
        _level_checks(report, n, G.level(n), DD.level(n))
    anchor = ANCHORS["abelian_reflexivity"]
    for n in range(1, G.depth):
        left = evaluation_map(G.level(n + 1)) @ G.transition(n)
        right = DD.transition(n) @ evaluation_map(G.level(n))
        report.add("naturality square", left == right, anchor, n, _first_difference(left, right))
    report.artifacts["double_dual"] = tower_to_json(DD)
    return report


def reflexivity_check_pro(G: ProGroup) -> Report:
    """Verify ``iota: G -> G**`` level by level for a profinite tower."""
    report = Report(f"reflexivity of pro tower {G.name} (depth {G.depth})")
    DD = dual_ind(dual_pro(G))
    for n in range(1, G.depth + 1):
        _level_checks(report, n, G.level(n), DD.level(n))
    anchor = ANCHORS["abelian_reflexivity"]
    for n in range(1, G.depth):
        left = evaluation_map(G.level(n)) @ G.transition(n)
        right = DD.transition(n) @ evaluation_map(G.level(n + 1))
        report.add("naturality square", left == right, anchor, n, _first_difference(left, right))
    report.artifacts["double_dual"] = tower_to_json(DD)
    return report


# --------------------------------------------------------------------------
# builders


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % k for k in range(2, int(p**0.5) + 1))


def _check(depth: int, p: int | None = None) -> None:
    if p is not None and not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if not isinstance(depth, int) or depth < 1:
        raise BadDepth(f"depth must be a positive integer, got {depth!r}")


def pruefer(p: int, depth: int) -> IndGroup:
    """``Z/p -> Z/p^2 -> ...`` with ``x -> p x``."""
    _check(depth, p)
    levels = [abelian_group(p**n) for n in range(1, depth + 1)]
    maps = [Hom(levels[n], levels[n + 1], [[p]]) for n in range(depth - 1)]
    return IndGroup(levels, maps, f"pruefer({p},{depth})")


def padic(p: int, depth: int) -> ProGroup:
    """``... -> Z/p^2 -> Z/p`` by reduction."""
    _check(depth, p)
    levels = [abelian_group(p**n) for n in range(1, depth + 1)]
    maps = [Hom(levels[n + 1], levels[n], [[1]]) for n in range(depth - 1)]
    return ProGroup(levels, maps, f"padic({p},{depth})")


def direct_sum_tower(d: int, depth: int) -> IndGroup:
    """``(Z/d)^n`` with the inclusion of the first ``n`` coordinates."""
    _check(depth)
    if d < 2:
        raise ValueError("summand order must be at least 2")
    levels = [FiniteAbelianGroup((d,) * n) for n in range(1, depth + 1)]
    maps = [
        Hom(levels[n - 1], levels[n], [[int(i == j) for j in range(n)] for i in range(n + 1)])
        for n in range(1, depth)
    ]
    return IndGroup(levels, maps, f"direct_sum({d},{depth})")


def product_pro(d: int, depth: int) -> ProGroup:
    """``(Z/d)^n`` with the projection forgetting the last coordinate."""
    _check(depth)
    if d < 2:
        raise ValueError("factor order must be at least 2")
    levels = [FiniteAbelianGroup((d,) * n) for n in range(1, depth + 1)]
    maps = [
        Hom(levels[n], levels[n - 1], [[int(i == j) for j in range(n + 1)] for i in range(n)])
        for n in range(1, depth)
    ]
    return ProGroup(levels, maps, f"product({d},{depth})")


def factorial_ind(depth: int) -> IndGroup:
    """``Z/1! -> Z/2! -> Z/3! -> ...`` with ``x -> (n+1) x``; truncations of Q/Z."""
    _check(depth)
    levels, f = [], 1
    for n in range(1, depth + 1):
        f *= n
        levels.append(abelian_group(f))
    maps = [
        Hom(levels[n - 1], levels[n], [[n + 1] * levels[n - 1].rank] * levels[n].rank)
        for n in range(1, depth)
    ]
    return IndGroup(levels, maps, f"factorial({depth})")


# --------------------------------------------------------------------------
# serialisation


def group_to_json(G: FiniteAbelianGroup) -> dict:
    out = {"kind": "finite_abelian", "invariant_factors": list(G.invariant_factors)}
    if isinstance(G, DualGroup):
        out["dual_of"] = group_to_json(G.primal)
    return out


def tower_to_json(T: IndGroup | ProGroup) -> dict:
    return {
        "kind": "ind_tower" if isinstance(T, IndGroup) else "pro_tower",
        "name": T.name,
        "levels": [group_to_json(L) for L in T.levels],
        "transitions": [[list(r) for r in t.matrix] for t in T.transitions],
    }
