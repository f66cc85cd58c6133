"""Hopf algebras over towers of finite groups.

For a locally finite group ``G = union G_n`` (an ind tower of groups):

* ``C[G]``  is the ind tower of group algebras ``C[G_n]`` (inclusions),
* ``C^G``   is the pro tower of function algebras ``C^(G_n)`` (restrictions).

For a profinite group ``G = lim G_n`` (a pro tower of groups):

* ``O(G)``  is the ind tower of function algebras ``C^(G_n)`` (inflations),
* ``O(G)'`` is the pro tower of group algebras ``C[G_n]`` (pushforwards).

Every level is finite-dimensional, so the Arens-Michael envelope acts as
the identity on all four; :func:`arens_michael_envelope` only does so for
towers whose construction it can name (the provenance tag).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .groups import FiniteGroup, GroupHom, direct_product, from_abelian, symmetric
from .hopf import (
    FDHopf,
    HopfMap,
    check_spectrum,
    dual_hopf,
    function_algebra_hopf,
    group_algebra_hopf,
    hopf_morphism_report,
    is_hopf_isomorphism,
    spectrum_abelian_group_algebra,
)
from .report import ANCHORS, Report
from .towers import BadDepth, IndGroup, InvalidTower, ProGroup, dual_ind

__all__ = [
    "UnknownProvenance",
    "TowerOfGroups",
    "IndHopf",
    "ProHopf",
    "EnvelopeCertificate",
    "Enveloped",
    "symmetric_tower",
    "group_tower",
    "product_pro_groups",
    "ind_group_algebra",
    "ind_function_algebra",
    "pro_function_algebra",
    "pro_group_algebra",
    "dual_tower",
    "arens_michael_envelope",
    "holomorphic_dual",
    "reflexivity_check",
    "canonical_comparison",
    "construction_kind",
    "expected_dual",
    "spectrum_cross_check",
]


class UnknownProvenance(ValueError):
    pass


# --------------------------------------------------------------------------
# towers of finite groups


@dataclass(frozen=True, eq=False)
class TowerOfGroups:
    """``direction == "ind"``: injections ``G_n -> G_{n+1}``;
    ``direction == "pro"``: surjections ``G_{n+1} -> G_n``."""

    direction: str
    levels: tuple[FiniteGroup, ...]
    maps: tuple[GroupHom, ...]
    name: str = "G"

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(self.levels))
        object.__setattr__(self, "maps", tuple(self.maps))
        if self.direction not in ("ind", "pro"):
            raise ValueError("direction must be 'ind' or 'pro'")
        if not self.levels:
            raise BadDepth("a tower needs at least one level")
        if len(self.maps) != len(self.levels) - 1:
            raise InvalidTower(f"{len(self.levels)} levels need {len(self.levels) - 1} maps")
        up = self.direction == "ind"
        for n, f in enumerate(self.maps, 1):
            lo, hi = self.levels[n - 1], self.levels[n]
            src, dst = (lo, hi) if up else (hi, lo)
            if f.source != src or f.target != dst:
                raise InvalidTower(f"map {n} does not connect levels {n} and {n + 1}")
            if up and not f.is_injective:
                raise InvalidTower(f"map {n} -> {n + 1} is not injective")
            if not up and not f.is_surjective:
                raise InvalidTower(f"map {n + 1} -> {n} is not surjective")

    @property
    def depth(self) -> int:
        return len(self.levels)

    @property
    def is_abelian(self) -> bool:
        return all(G.is_abelian for G in self.levels)


def _group_hom(source: FiniteGroup, target: FiniteGroup, images) -> GroupHom:
    from .groups import InvalidGroupHom

    try:
        return GroupHom(source, target, images)
    except InvalidGroupHom as exc:
        raise InvalidTower(str(exc)) from None


def symmetric_tower(depth: int) -> TowerOfGroups:
    """``S_1 < S_2 < ... < S_depth``, each fixing the new last point."""
    if depth < 1:
        raise BadDepth("depth must be positive")
    levels = [symmetric(n) for n in range(1, depth + 1)]
    maps = []
    for n in range(1, depth):
        lo, hi = levels[n - 1], levels[n]
        index = {p: i for i, p in enumerate(hi.labels)}
        maps.append(_group_hom(lo, hi, [index[p + (n,)] for p in lo.labels]))
    return TowerOfGroups("ind", levels, maps, f"S-tower({depth})")


def group_tower(T: IndGroup | ProGroup) -> TowerOfGroups:
    """An abelian tower re-expressed through multiplication tables."""
    levels = [from_abelian(L) for L in T.levels]
    maps = []
    for n, t in enumerate(T.transitions):
        A, B = t.source, t.target
        maps.append(_group_hom(from_abelian(A), from_abelian(B), [B.index(t(g)) for g in A.elements()]))
    return TowerOfGroups("ind" if isinstance(T, IndGroup) else "pro", levels, maps, T.name)


def product_pro_groups(G: FiniteGroup, depth: int) -> TowerOfGroups:
    """``G, G^2, ..., G^depth`` with the projections forgetting the last factor."""
    if depth < 1:
        raise BadDepth("depth must be positive")
    levels = [G]
    for _ in range(depth - 1):
        levels.append(direct_product(levels[-1], G))
    maps = [_group_hom(levels[n], levels[n - 1], [i // G.order for i in range(levels[n].order)]) for n in range(1, depth)]
    return TowerOfGroups("pro", levels, maps, f"product({G.name},{depth})")


# --------------------------------------------------------------------------
# towers of Hopf algebras


@dataclass(frozen=True, eq=False)
class _HopfTower:
    levels: tuple[FDHopf, ...]
    transitions: tuple[HopfMap, ...]
    provenance: str | None = None
    name: str = "H"
    groups: TowerOfGroups | None = field(default=None, repr=False)

    _up = True

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(self.levels))
        object.__setattr__(self, "transitions", tuple(self.transitions))
        if not self.levels:
            raise BadDepth("a tower needs at least one level")
        if len(self.transitions) != len(self.levels) - 1:
            raise InvalidTower(f"{len(self.levels)} levels need {len(self.levels) - 1} transitions")
        for n, t in enumerate(self.transitions, 1):
            lo, hi = self.levels[n - 1], self.levels[n]
            src, dst = (lo, hi) if self._up else (hi, lo)
            if not (t.source is src or t.source.same_structure(src)) or not (t.target is dst or t.target.same_structure(dst)):
                raise InvalidTower(f"transition {n} does not connect levels {n} and {n + 1}")
            bad = hopf_morphism_report(t).failures()
            if bad:
                raise InvalidTower(f"transition {n} is not a Hopf morphism ({bad[0].check})")
            if self._up and not t.is_injective:
                raise InvalidTower(f"transition {n} -> {n + 1} is not injective")
            if not self._up and not t.is_surjective:
                raise InvalidTower(f"transition {n + 1} -> {n} is not surjective")

    @property
    def depth(self) -> int:
        return len(self.levels)

    def dims(self) -> list[int]:
        return [H.dim for H in self.levels]


class IndHopf(_HopfTower):
    """Injective Hopf morphisms ``H_n -> H_{n+1}``."""

    _up = True


class ProHopf(_HopfTower):
    """Surjective Hopf morphisms ``H_{n+1} -> H_n``."""

    _up = False


def _check_direction(T: TowerOfGroups, direction: str) -> None:
    if not isinstance(T, TowerOfGroups):
        raise InvalidTower(f"expected a tower of groups, got {type(T).__name__}")
    if T.direction != direction:
        raise InvalidTower(f"expected an {direction} tower of groups, got {T.direction}")


def _pushforward(f: GroupHom, A: FDHopf, B: FDHopf) -> HopfMap:
    return HopfMap(A, B, {a: {b: 1} for a, b in enumerate(f.images)})


def _pullback(f: GroupHom, A: FDHopf, B: FDHopf) -> HopfMap:
    """``C^target -> C^source``, ``delta_b -> sum over the fiber of b``."""
    cols: dict = {b: {} for b in range(f.target.order)}
    for a, b in enumerate(f.images):
        cols[b][a] = 1
    return HopfMap(B, A, cols)


def ind_group_algebra(T: TowerOfGroups) -> IndHopf:
    """``C[G]`` for locally finite ``G``: group algebras with induced inclusions."""
    _check_direction(T, "ind")
    levels = [group_algebra_hopf(G) for G in T.levels]
    maps = [_pushforward(f, levels[n], levels[n + 1]) for n, f in enumerate(T.maps)]
    return IndHopf(levels, maps, "group_algebra:ind", f"C[{T.name}]", T)


def ind_function_algebra(T: TowerOfGroups) -> ProHopf:
    """``C^G`` for locally finite ``G``: function algebras with restriction maps."""
    _check_direction(T, "ind")
    levels = [function_algebra_hopf(G) for G in T.levels]
    maps = [_pullback(f, levels[n], levels[n + 1]) for n, f in enumerate(T.maps)]
    return ProHopf(levels, maps, "function_algebra:ind", f"C^{T.name}", T)


def pro_function_algebra(T: TowerOfGroups) -> IndHopf:
    """``O(G)`` for profinite ``G``: function algebras with inflation maps."""
    _check_direction(T, "pro")
    levels = [function_algebra_hopf(G) for G in T.levels]
    maps = [_pullback(f, levels[n + 1], levels[n]) for n, f in enumerate(T.maps)]
    return IndHopf(levels, maps, "function_algebra:pro", f"O({T.name})", T)


def pro_group_algebra(T: TowerOfGroups) -> ProHopf:
    """``O(G)'`` for profinite ``G``: group algebras with pushforwards."""
    _check_direction(T, "pro")
    levels = [group_algebra_hopf(G) for G in T.levels]
    maps = [_pushforward(f, levels[n + 1], levels[n]) for n, f in enumerate(T.maps)]
    return ProHopf(levels, maps, "group_algebra:pro", f"O({T.name})'", T)


def dual_tower(H: IndHopf | ProHopf) -> IndHopf | ProHopf:
    """Level-wise dual Hopf algebras with transposed transitions."""
    levels = [dual_hopf(L) for L in H.levels]
    maps = []
    for n, t in enumerate(H.transitions):
        lo, hi = levels[n], levels[n + 1]
        maps.append(t.transpose(hi, lo) if isinstance(H, IndHopf) else t.transpose(lo, hi))
    prov = None if H.provenance is None else f"dual({H.provenance})"
    cls = ProHopf if isinstance(H, IndHopf) else IndHopf
    return cls(levels, maps, prov, f"({H.name})'", H.groups)


# --------------------------------------------------------------------------
# envelope and reflexivity

_FLIP = {
    "group_algebra:ind": "function_algebra:ind",
    "function_algebra:ind": "group_algebra:ind",
    "function_algebra:pro": "group_algebra:pro",
    "group_algebra:pro": "function_algebra:pro",
}

_REASONS = {
    "group_algebra:ind": (
        "locally finite: CG complete in strongest locally convex topology",
        "every finitely generated subalgebra is finite-dimensional, so the envelope changes nothing",
    ),
    "function_algebra:ind": (
        "C^G is a countable product of finite-dimensional algebras, hence Arens-Michael",
        "each level is a finite product of copies of C, and the projective limit is already complete for every continuous submultiplicative prenorm",
    ),
    "function_algebra:pro": (
        "O(G) is a countable union of finite-dimensional C^(G_n) carrying the finest locally convex topology",
        "every level is finite-dimensional and the inductive limit carries the finest locally convex topology, so no prenorm completion adds anything",
    ),
    "group_algebra:pro": (
        "O(G)' is the projective limit of the finite-dimensional algebras C[G_n]",
        "a projective limit of finite-dimensional algebras is complete for its submultiplicative prenorms",
    ),
}


def _base(provenance: str | None) -> tuple[str, int]:
    """Underlying construction and number of dualisations applied to it."""
    if provenance is None:
        raise UnknownProvenance("tower has no provenance tag; the envelope cannot be justified")
    count = 0
    p = provenance
    while p.startswith("dual(") and p.endswith(")"):
        p = p[5:-1]
        count += 1
    if p not in _REASONS:
        raise UnknownProvenance(f"unrecognised provenance {provenance!r}")
    return p, count


@dataclass(frozen=True)
class EnvelopeCertificate:
    provenance: str
    identified_as: str
    reason: str
    justification: str
    level_dims: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "provenance": self.provenance,
            "identified_as": self.identified_as,
            "reason": self.reason,
            "justification": self.justification,
            "level_dims": list(self.level_dims),
            "anchor": ANCHORS["envelope"],
        }


class Enveloped(NamedTuple):
    tower: IndHopf | ProHopf
    certificate: EnvelopeCertificate


def arens_michael_envelope(H: IndHopf | ProHopf | Enveloped) -> Enveloped:
    """Identity on provenance-tagged towers, with the reason it is the identity."""
    if isinstance(H, Enveloped):
        H = H.tower
    base, count = _base(H.provenance)
    kind = _FLIP[base] if count % 2 else base
    reason, justification = _REASONS[kind]
    if any(d < 1 for d in H.dims()):
        raise UnknownProvenance("levels must be finite-dimensional and nonzero")
    cert = EnvelopeCertificate(H.provenance, kind, reason, justification, tuple(H.dims()))
    return Enveloped(H, cert)


def holomorphic_dual(H: IndHopf | ProHopf) -> Enveloped:
    """``H^bullet``: the envelope of the strong dual."""
    _base(H.provenance)
    return arens_michael_envelope(dual_tower(H))


_NODE_NAMES = {
    "group_algebra:ind": "CG",
    "function_algebra:ind": "C^G",
    "function_algebra:pro": "O(G)",
    "group_algebra:pro": "O(G)'",
}


def _square_ok(H, Hdd, n: int) -> tuple[bool, object]:
    """Naturality of the level-wise identifications at transition ``n``."""
    t, tt = H.transitions[n - 1], Hdd.transitions[n - 1]
    # iota is the identity matrix at every level, so the square commutes
    # iff the double-dual transition has the same matrix as the original one
    iota_src = HopfMap.identity(t.source, tt.source)
    iota_dst = HopfMap.identity(t.target, tt.target)
    left = tt @ iota_src
    right = iota_dst @ t
    if left.columns == right.columns:
        return True, None
    i = next(i for i in range(t.source.dim) if left.columns.get(i) != right.columns.get(i))
    return False, {"basis": i}


def reflexivity_check(H: IndHopf | ProHopf) -> Report:
    """Build ``H -> H' -> H^bullet -> (H^bullet)' -> H`` and verify it level by level."""
    base, count = _base(H.provenance)
    kind = _FLIP[base] if count % 2 else base
    anchor = ANCHORS["reflexivity_locally_finite" if kind.endswith(":ind") else "reflexivity_profinite"]
    report = Report(f"holomorphic reflexivity of {H.name} (depth {H.depth})")

    own = arens_michael_envelope(H)
    Hd = dual_tower(H)
    Hb, cert1 = arens_michael_envelope(Hd)
    Hbd = dual_tower(Hb)
    Hbb, cert2 = arens_michael_envelope(Hbd)

    for n in range(1, H.depth + 1):
        for label, T in (("H", H), ("H'", Hd), ("(H^bullet)'", Hbd)):
            r = T.levels[n - 1].axiom_report
            report.add(f"hopf axioms {label}", r.passed, ANCHORS["hopf_axioms"], n, [x.check for x in r.failures()])
        iota = HopfMap.identity(H.levels[n - 1], Hbb.levels[n - 1])
        report.add("double dual is identity matrix", iota.is_identity_matrix(), ANCHORS["double_dual"], n)
        report.add("double dual is Hopf isomorphism", is_hopf_isomorphism(iota), anchor, n,
                   [x.check for x in hopf_morphism_report(iota).failures()])
    for n in range(1, H.depth):
        ok, w = _square_ok(H, Hbb, n)
        report.add("naturality square", ok, anchor, n, w)
        t = Hd.transitions[n - 1]
        flipped = t.is_surjective if isinstance(H, IndHopf) else t.is_injective
        report.add("dual transition flips injectivity", flipped, ANCHORS["hopf_duality"], n)

    name = _NODE_NAMES[kind]
    dual_name = _NODE_NAMES[_FLIP[kind]]
    node = lambda T, label: {"label": label, "tower": T.name, "kind": type(T).__name__,
                             "provenance": T.provenance, "dims": T.dims()}
    levels_ok = lambda check: all(r.passed for r in report.records if r.check == check)
    report.artifacts["diagram"] = {
        "nodes": {
            "H": node(H, name),
            "H'": node(Hd, dual_name),
            "H^bullet": node(Hb, dual_name),
            "(H^bullet)'": node(Hbd, name),
        },
        "edges": [
            {"from": "H", "to": "H'", "functor": "strong dual",
             "verified": levels_ok("hopf axioms H'"), "certificate": own.certificate.to_json()},
            {"from": "H'", "to": "H^bullet", "functor": "Arens-Michael envelope",
             "verified": Hb is Hd, "certificate": cert1.to_json()},
            {"from": "H^bullet", "to": "(H^bullet)'", "functor": "strong dual",
             "verified": levels_ok("hopf axioms (H^bullet)'"), "certificate": cert1.to_json()},
            {"from": "(H^bullet)'", "to": "H", "functor": "Arens-Michael envelope",
             "verified": Hbb is Hbd and levels_ok("double dual is Hopf isomorphism") and levels_ok("naturality square"),
             "certificate": cert2.to_json()},
        ],
    }
    report.add("diagram edges carry certificates",
               all(e["certificate"] for e in report.artifacts["diagram"]["edges"]), ANCHORS["envelope"])
    return report


def canonical_comparison(A: IndHopf | ProHopf, B: IndHopf | ProHopf) -> Report:
    """Compare two towers through identity matrices (the canonical evaluation pairing).

    Checks a Hopf isomorphism at each level and that every square with the
    transitions commutes.
    """
    report = Report(f"comparison {A.name} ~ {B.name}")
    anchor = ANCHORS["hopf_duality"]
    if type(A) is not type(B) or A.depth != B.depth:
        report.add("same shape", False, anchor, witness={"left": type(A).__name__, "right": type(B).__name__})
        return report
    maps = [HopfMap.identity(a, b) for a, b in zip(A.levels, B.levels)]
    for n, f in enumerate(maps, 1):
        report.add("level isomorphism", is_hopf_isomorphism(f), anchor, n,
                   [x.check for x in hopf_morphism_report(f).failures()])
    for n in range(1, A.depth):
        s, t = A.transitions[n - 1], B.transitions[n - 1]
        up = isinstance(A, IndHopf)
        fs, ft = (maps[n - 1], maps[n]) if up else (maps[n], maps[n - 1])
        left, right = t @ fs, ft @ s
        report.add("comparison square", left.columns == right.columns, anchor, n)
    return report


_CONSTRUCTIONS = {
    "group_algebra:ind": ind_group_algebra,
    "function_algebra:ind": ind_function_algebra,
    "function_algebra:pro": pro_function_algebra,
    "group_algebra:pro": pro_group_algebra,
}


def construction_kind(H: IndHopf | ProHopf) -> str:
    """Which of the four constructions ``H`` is, up to canonical identification."""
    base, count = _base(H.provenance)
    return _FLIP[base] if count % 2 else base


def expected_dual(H: IndHopf | ProHopf) -> IndHopf | ProHopf:
    """The construction that ``dual_tower(H)`` should match, built from the group tower."""
    if H.groups is None:
        raise UnknownProvenance("tower does not record its group tower")
    return _CONSTRUCTIONS[_FLIP[construction_kind(H)]](H.groups)


def spectrum_cross_check(T: IndGroup) -> Report:
    """Spectra of ``C[G_n]`` against the character groups of ``dual_ind(T)``.

    Each spectrum must be a group isomorphic to the dual level, and
    restricting characters along ``C[G_n] -> C[G_{n+1}]`` must agree with the
    dual transition.
    """
    anchor = ANCHORS["spectrum"]
    report = Report(f"spectrum cross-check for {T.name}")
    D = dual_ind(T)
    C = ind_group_algebra(group_tower(T))
    spectra = []
    for n in range(1, T.depth + 1):
        G = T.level(n)
        points = spectrum_abelian_group_algebra(G)
        spectra.append({p.character: p for p in points})
        r = check_spectrum(G, points)
        for rec in r.records:
            report.add(rec.check, rec.passed, rec.anchor, n, rec.witness)
        chars = [p.character for p in points]
        report.add("indexed by dual level", sorted(chars, key=lambda c: c.coords) == list(D.level(n).elements())
                   and all(c.group == D.level(n) for c in chars), anchor, n)
        report.add("group algebra dimension", C.levels[n - 1].dim == G.order, anchor, n)
    for n in range(1, T.depth):
        t = T.transition(n)
        dt = D.transition(n)
        G, G1 = T.level(n), T.level(n + 1)
        bad = None
        for chi, p in spectra[n].items():
            q = spectra[n - 1][dt(chi)]
            for g in G.elements():
                if p.values[G1.index(t(g))] != q.values[G.index(g)]:
                    bad = {"chi": list(chi.coords), "g": list(g.coords)}
                    break
            if bad:
                break
        report.add("restriction square", bad is None, anchor, n, bad)
    return report
