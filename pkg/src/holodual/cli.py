"""Command-line front end: parse a JSON document, run checks, emit a report.

Exit codes: 0 when every check passes, 1 when some check fails (the report
is still written), 2 for unreadable or invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction
from typing import Any

from . import __version__
from .cyclo import Cyclotomic, parse_cyclotomic
from .finab import (
    Element,
    FiniteAbelianGroup,
    Hom,
    InvalidGroup,
    InvalidHom,
    dual_group,
    dual_hom,
    is_injective,
    is_surjective,
)
from .groups import FiniteGroup, GroupHom, InvalidGroupHom, InvalidGroupTable, from_abelian, group_from_literal
from .hopf import (
    AxiomFailure,
    FDHopf,
    HopfMap,
    check_hopf_axioms,
    check_spectrum,
    dual_hopf,
    evaluation_pairing,
    function_algebra_hopf,
    group_algebra_hopf,
    hopf_morphism_report,
    is_hopf_isomorphism,
)
from .hopftowers import (
    IndHopf,
    ProHopf,
    TowerOfGroups,
    UnknownProvenance,
    canonical_comparison,
    dual_tower,
    expected_dual,
    group_tower,
    ind_function_algebra,
    ind_group_algebra,
    pro_function_algebra,
    pro_group_algebra,
    product_pro_groups,
    reflexivity_check,
    spectrum_cross_check,
    symmetric_tower,
)
from .locfun import LocallyConstantFunction, decompose_characters, minimal_level, reconstruct
from .report import ANCHORS, Report
from .towers import (
    BadDepth,
    IndGroup,
    InvalidTower,
    NotPrime,
    ProGroup,
    direct_sum_tower,
    dual_ind,
    dual_pro,
    factorial_ind,
    group_to_json,
    padic,
    product_pro,
    pruefer,
    reflexivity_check_ind,
    reflexivity_check_pro,
    tower_to_json,
)

FORMAT_ENV = "HOLODUAL_FORMAT"
SCHEMA_VERSION = "1"


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class ValidationError(ValueError):
    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path


# --------------------------------------------------------------------------
# documents

_LIBRARY_ERRORS = (
    InvalidGroup, InvalidHom, InvalidTower, NotPrime, BadDepth, InvalidGroupTable,
    InvalidGroupHom, UnknownProvenance, ArithmeticError, ZeroDivisionError,
)


def _int(doc: dict, key: str, path: str, minimum: int | None = None) -> int:
    if key not in doc:
        raise ValidationError(f"missing field {key!r}", path)
    v = doc[key]
    if not isinstance(v, int) or isinstance(v, bool):
        raise ValidationError(f"{key!r} must be an integer", f"{path}.{key}")
    if minimum is not None and v < minimum:
        raise ValidationError(f"{key!r} must be at least {minimum}", f"{path}.{key}")
    return v


def _rational(x, path: str) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ValidationError("expected an integer or a 'p/q' string", path)
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"bad rational {x!r}", path) from None


def _int_list(x, path: str) -> list[int]:
    if not isinstance(x, list) or any(isinstance(v, bool) or not isinstance(v, int) for v in x):
        raise ValidationError("expected a list of integers", path)
    return x


def _matrix(x, path: str) -> list[list[int]]:
    if not isinstance(x, list):
        raise ValidationError("expected a matrix (list of rows)", path)
    return [_int_list(r, f"{path}[{i}]") for i, r in enumerate(x)]


def _abelian(doc, path: str) -> FiniteAbelianGroup:
    factors = doc.get("invariant_factors") if isinstance(doc, dict) else doc
    return FiniteAbelianGroup(tuple(_int_list(factors, path)))


def _finite_group(doc, path: str) -> FiniteGroup:
    if isinstance(doc, str):
        try:
            return group_from_literal(doc)
        except ValueError as exc:
            raise ValidationError(str(exc), path) from None
    if isinstance(doc, dict) and "table" in doc:
        return FiniteGroup(_matrix(doc["table"], f"{path}.table"), doc.get("name", "G"))
    if isinstance(doc, dict) and "invariant_factors" in doc:
        return from_abelian(_abelian(doc, f"{path}.invariant_factors"))
    raise ValidationError("group must be a literal, a table or invariant factors", path)


def _depth(doc: dict, path: str, override: int | None) -> int:
    return override if override is not None else _int(doc, "depth", path, 1)


_BUILDERS = {
    "pruefer": lambda d, p, o: pruefer(_int(d, "p", p), _depth(d, p, o)),
    "padic": lambda d, p, o: padic(_int(d, "p", p), _depth(d, p, o)),
    "direct_sum_tower": lambda d, p, o: direct_sum_tower(_int(d, "d", p), _depth(d, p, o)),
    "product_pro": lambda d, p, o: product_pro(_int(d, "d", p), _depth(d, p, o)),
    "factorial_ind": lambda d, p, o: factorial_ind(_depth(d, p, o)),
    "symmetric_tower": lambda d, p, o: symmetric_tower(_depth(d, p, o)),
    "product_pro_group": lambda d, p, o: product_pro_groups(_finite_group(d.get("group"), f"{p}.group"), _depth(d, p, o)),
}


def _explicit_tower(doc: dict, path: str, depth: int | None, up: bool) -> IndGroup | ProGroup:
    levels_doc = doc.get("levels")
    if not isinstance(levels_doc, list) or not levels_doc:
        raise ValidationError("'levels' must be a non-empty list", path)
    levels = []
    for i, L in enumerate(levels_doc):
        try:
            levels.append(_abelian(L, f"{path}.levels[{i}]"))
        except InvalidGroup as exc:
            raise ValidationError(f"level {i + 1}: {exc}", f"{path}.levels[{i}]") from None
    mats = doc.get("transitions", [])
    if not isinstance(mats, list) or len(mats) != len(levels) - 1:
        raise ValidationError(f"{len(levels)} levels need {len(levels) - 1} transitions", f"{path}.transitions")
    maps = []
    for n, M in enumerate(mats, 1):
        src, dst = (levels[n - 1], levels[n]) if up else (levels[n], levels[n - 1])
        where = f"{path}.transitions[{n - 1}]"
        try:
            f = Hom(src, dst, _matrix(M, where))
        except InvalidHom as exc:
            raise ValidationError(f"transition at level {n}: {exc}", where) from None
        maps.append(f)
    name = doc.get("name", "G")
    try:
        T = IndGroup(levels, maps, name) if up else ProGroup(levels, maps, name)
    except InvalidTower as exc:
        raise ValidationError(str(exc), path) from None
    if depth is not None:
        if depth > T.depth:
            raise ValidationError(f"depth {depth} exceeds the {T.depth} levels given", path)
        T = T.truncate(depth)
    return T


def _group_tower(doc: dict, path: str, depth: int | None) -> TowerOfGroups:
    direction = doc.get("direction")
    if direction not in ("ind", "pro"):
        raise ValidationError("'direction' must be 'ind' or 'pro'", path)
    levels = [_finite_group(g, f"{path}.levels[{i}]") for i, g in enumerate(doc.get("levels", []))]
    maps_doc = doc.get("maps", [])
    if len(maps_doc) != max(len(levels) - 1, 0):
        raise ValidationError(f"{len(levels)} levels need {len(levels) - 1} maps", f"{path}.maps")
    maps = []
    for n, images in enumerate(maps_doc, 1):
        src, dst = (levels[n - 1], levels[n]) if direction == "ind" else (levels[n], levels[n - 1])
        where = f"{path}.maps[{n - 1}]"
        try:
            maps.append(GroupHom(src, dst, _int_list(images, where)))
        except InvalidGroupHom as exc:
            raise ValidationError(f"map at level {n}: {exc}", where) from None
    try:
        T = TowerOfGroups(direction, levels, maps, doc.get("name", "G"))
    except InvalidTower as exc:
        raise ValidationError(str(exc), path) from None
    if depth is not None:
        if depth > T.depth:
            raise ValidationError(f"depth {depth} exceeds the {T.depth} levels given", path)
        T = TowerOfGroups(direction, T.levels[:depth], T.maps[: depth - 1], T.name)
    return T


def _hopf(doc: dict, path: str) -> FDHopf:
    if "construction" in doc:
        G = _finite_group(doc.get("group"), f"{path}.group")
        kind = doc["construction"]
        if kind == "group_algebra":
            H = group_algebra_hopf(G)
        elif kind == "function_algebra":
            H = function_algebra_hopf(G)
        else:
            raise ValidationError(f"unknown construction {kind!r}", f"{path}.construction")
        override = doc.get("antipode_override")
        if override is None:
            return H
        if not isinstance(override, dict):
            raise ValidationError("antipode_override must map basis indices to vectors", f"{path}.antipode_override")
        antipode = dict(H.antipode)
        for i, v in override.items():
            where = f"{path}.antipode_override.{i}"
            if not str(i).isdigit() or not isinstance(v, dict):
                raise ValidationError("expected basis index -> {index: coefficient}", where)
            antipode[int(i)] = {int(j): _rational(c, f"{where}.{j}") for j, c in v.items()}
        return FDHopf(H.dim, H.mult, H.unit, H.comult, H.counit, antipode, doc.get("name", H.name + "~"))
    dim = _int(doc, "dim", path, 1)
    mult: dict = {}
    for r, row in enumerate(doc.get("mult", [])):
        i, j, k, c = row
        mult.setdefault((i, j), {})[k] = _rational(c, f"{path}.mult[{r}]")
    comult: dict = {}
    for r, row in enumerate(doc.get("comult", [])):
        i, j, k, c = row
        comult.setdefault(i, {})[(j, k)] = _rational(c, f"{path}.comult[{r}]")
    antipode: dict = {}
    for r, row in enumerate(doc.get("antipode", [])):
        i, j, c = row
        antipode.setdefault(i, {})[j] = _rational(c, f"{path}.antipode[{r}]")
    unit = {k: _rational(c, f"{path}.unit") for k, c in doc.get("unit", [])}
    counit = [_rational(c, f"{path}.counit") for c in doc.get("counit", [])]
    return FDHopf(dim, mult, unit, comult, tuple(counit), antipode, doc.get("name", "H"))


_HOPF_TOWERS = {
    ("group_algebra", "ind"): ind_group_algebra,
    ("function_algebra", "ind"): ind_function_algebra,
    ("function_algebra", "pro"): pro_function_algebra,
    ("group_algebra", "pro"): pro_group_algebra,
}


def _hopf_tower(doc: dict, path: str, depth: int | None) -> IndHopf | ProHopf:
    T = build(doc.get("tower"), f"{path}.tower", depth)
    if isinstance(T, (IndGroup, ProGroup)):
        T = group_tower(T)
    if not isinstance(T, TowerOfGroups):
        raise ValidationError("'tower' must describe a tower of groups", f"{path}.tower")
    key = (doc.get("construction"), T.direction)
    if key not in _HOPF_TOWERS:
        raise ValidationError(f"unknown construction {doc.get('construction')!r}", f"{path}.construction")
    return _HOPF_TOWERS[key](T)


def _function(doc: dict, path: str, depth: int | None) -> LocallyConstantFunction:
    T = build(doc.get("tower"), f"{path}.tower", depth)
    if not isinstance(T, ProGroup):
        raise ValidationError("functions live on pro towers", f"{path}.tower")
    level = _int(doc, "level", path, 1)
    if level > T.depth:
        raise ValidationError(f"level {level} exceeds depth {T.depth}", f"{path}.level")
    key = "table" if "table" in doc else "values"
    values = doc.get(key)
    if not isinstance(values, list):
        raise ValidationError("'table' must be a list", f"{path}.{key}")
    table = []
    for i, v in enumerate(values):
        try:
            table.append(parse_cyclotomic(v))
        except (ValueError, OverflowError) as exc:
            raise ValidationError(str(exc), f"{path}.{key}[{i}]") from None
    if len(table) != T.level(level).order:
        raise ValidationError(f"level {level} has {T.level(level).order} elements, got {len(table)} values", f"{path}.{key}")
    return LocallyConstantFunction(T, level, tuple(table))


def build(doc: Any, path: str = "$", depth: int | None = None):
    """Turn a decoded document into validated objects."""
    if not isinstance(doc, dict):
        raise ValidationError("expected an object", path)
    try:
        if "builder" in doc:
            b = doc["builder"]
            if b not in _BUILDERS:
                raise ValidationError(f"unknown builder {b!r}", f"{path}.builder")
            return _BUILDERS[b](doc, path, depth)
        kind = doc.get("kind")
        if kind == "finite_abelian":
            return _abelian(doc, f"{path}.invariant_factors")
        if kind in ("ind_tower", "pro_tower"):
            return _explicit_tower(doc, path, depth, kind == "ind_tower")
        if kind == "group":
            return _finite_group(doc.get("group"), f"{path}.group")
        if kind == "group_tower":
            return _group_tower(doc, path, depth)
        if kind == "hopf":
            return _hopf(doc, path)
        if kind == "hopf_tower":
            return _hopf_tower(doc, path, depth)
        if kind == "function":
            return _function(doc, path, depth)
        raise ValidationError(f"unknown document kind {kind!r}", path)
    except ValidationError:
        raise
    except _LIBRARY_ERRORS as exc:
        raise ValidationError(str(exc), path) from None
    except (ValueError, TypeError, KeyError) as exc:
        raise ValidationError(f"malformed document: {exc}", path) from None


def parse(text: str, depth: int | None = None):
    """Parse and validate a JSON document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if depth is not None and depth < 1:
        raise ValidationError("depth must be positive")
    return build(doc, "$", depth)


# --------------------------------------------------------------------------
# commands


class NotApplicable(ValidationError):
    pass


def _subject_name(obj) -> str:
    return getattr(obj, "name", None) or str(obj)


def cmd_dual(obj, args) -> Report:
    if isinstance(obj, FiniteAbelianGroup):
        D = dual_group(obj)
        r = Report(f"dual of {obj}")
        anchor = ANCHORS["dual_group"]
        r.add("dual order", D.order == obj.order, anchor, witness={"order": obj.order, "dual": D.order})
        r.add("dual isomorphic to group", D.invariant_factors == obj.invariant_factors, anchor)
        r.artifacts["dual"] = group_to_json(D)
        return r
    if isinstance(obj, IndGroup):
        D = dual_ind(obj)
        r = Report(f"dual of ind tower {obj.name}")
        for n in range(1, obj.depth):
            r.add("dual transition surjective", is_surjective(D.transition(n)), ANCHORS["locally_finite_dual"], n)
        r.artifacts["dual"] = tower_to_json(D)
        return r
    if isinstance(obj, ProGroup):
        D = dual_pro(obj)
        r = Report(f"dual of pro tower {obj.name}")
        for n in range(1, obj.depth):
            r.add("dual transition injective", is_injective(D.transition(n)), ANCHORS["profinite_dual"], n)
        r.artifacts["dual"] = tower_to_json(D)
        return r
    if isinstance(obj, FDHopf):
        r = Report(f"dual of {obj.name}")
        r.extend(obj.axiom_report, "input: ")
        if not obj.axiom_report.passed:
            return r
        D = dual_hopf(obj)
        r.extend(D.axiom_report, "dual: ")
        r.artifacts["dual"] = D.to_json()
        return r
    if isinstance(obj, FiniteGroup):
        r = Report(f"dual of C[{obj.name}]")
        f = evaluation_pairing(obj)
        r.extend(f.source.axiom_report, "dual: ")
        r.add("evaluation pairing is Hopf isomorphism onto C^G", is_hopf_isomorphism(f), ANCHORS["hopf_duality"],
              witness=[x.check for x in hopf_morphism_report(f).failures()])
        r.artifacts["dual"] = f.source.to_json()
        return r
    if isinstance(obj, (IndHopf, ProHopf)):
        D = dual_tower(obj)
        r = Report(f"dual of {obj.name}")
        for n, t in enumerate(D.transitions, 1):
            ok = t.is_surjective if isinstance(obj, IndHopf) else t.is_injective
            r.add("dual transition flips injectivity", ok, ANCHORS["hopf_duality"], n)
        if obj.groups is not None:
            r.extend(canonical_comparison(D, expected_dual(obj)))
        r.artifacts["dual"] = {"kind": type(D).__name__, "provenance": D.provenance, "dims": D.dims()}
        return r
    raise NotApplicable(f"dual is not defined for {type(obj).__name__} documents")


def cmd_reflexivity(obj, args) -> Report:
    if isinstance(obj, FiniteAbelianGroup):
        return reflexivity_check_ind(IndGroup([obj], [], str(obj)))
    if isinstance(obj, IndGroup):
        return reflexivity_check_ind(obj)
    if isinstance(obj, ProGroup):
        return reflexivity_check_pro(obj)
    if isinstance(obj, TowerOfGroups):
        obj = ind_group_algebra(obj) if obj.direction == "ind" else pro_function_algebra(obj)
    if isinstance(obj, (IndHopf, ProHopf)):
        return reflexivity_check(obj)
    if isinstance(obj, FDHopf):
        r = Report(f"double dual of {obj.name}")
        r.extend(obj.axiom_report)
        if r.passed:
            DD = dual_hopf(dual_hopf(obj))
            iota = HopfMap.identity(obj, DD)
            r.add("double dual is Hopf isomorphism", is_hopf_isomorphism(iota), ANCHORS["double_dual"],
                  witness=[x.check for x in hopf_morphism_report(iota).failures()])
        return r
    raise NotApplicable(f"reflexivity is not defined for {type(obj).__name__} documents")


def cmd_hopf_axioms(obj, args) -> Report:
    if isinstance(obj, FDHopf):
        return check_hopf_axioms(obj)
    if isinstance(obj, FiniteGroup):
        r = Report(f"Hopf axioms for C[{obj.name}] and C^{obj.name}")
        r.extend(group_algebra_hopf(obj).axiom_report, "C[G]: ")
        r.extend(function_algebra_hopf(obj).axiom_report, "C^G: ")
        return r
    if isinstance(obj, (IndHopf, ProHopf)):
        r = Report(f"Hopf axioms for {obj.name}")
        for n, H in enumerate(obj.levels, 1):
            for rec in H.axiom_report.records:
                r.add(rec.check, rec.passed, rec.anchor, n, rec.witness)
        for n, t in enumerate(obj.transitions, 1):
            for rec in hopf_morphism_report(t).records:
                r.add(f"transition {rec.check}", rec.passed, rec.anchor, n, rec.witness)
        return r
    raise NotApplicable(f"hopf-axioms is not defined for {type(obj).__name__} documents")


def _decompose(f: LocallyConstantFunction, r: Report, prefix: str = "") -> dict:
    coeffs = decompose_characters(f)
    back = reconstruct(coeffs, f.tower, f.level)
    bad = next((i for i, (x, y) in enumerate(zip(back.table, f.table)) if x != y), None)
    r.add(prefix + "reconstruction exact", bad is None, ANCHORS["character_expansion"], f.level, {"element": bad})
    k = minimal_level(f)
    # nonzero coefficients must sit on characters pulled back from the minimal level
    pulled = {dual_hom(f.tower.projection(f.level, k))(chi) for chi in dual_group(f.tower.level(k)).elements()}
    stray = [list(chi.coords) for chi, c in coeffs.items() if not c.is_zero() and chi not in pulled]
    r.add(prefix + "support factors through minimal level", not stray, ANCHORS["locally_constant"], k, stray[:1] or None)
    return {
        "level": f.level,
        "minimal_level": k,
        "coefficients": [{"character": list(chi.coords), "coefficient": c} for chi, c in coeffs.items() if not c.is_zero()],
    }


def cmd_decompose(obj, args) -> Report:
    if not isinstance(obj, LocallyConstantFunction):
        raise NotApplicable("decompose needs a function document")
    r = Report(f"character decomposition on {obj.tower.name} at level {obj.level}")
    r.artifacts["decomposition"] = _decompose(obj, r)
    return r


def cmd_spectrum(obj, args) -> Report:
    if isinstance(obj, FiniteAbelianGroup):
        return check_spectrum(obj)
    if isinstance(obj, FiniteGroup):
        if not obj.is_abelian:
            raise NotApplicable(f"{obj.name} is not abelian; its group algebra has no full character spectrum")
        return check_spectrum(obj)
    if isinstance(obj, IndGroup):
        return spectrum_cross_check(obj)
    if isinstance(obj, ProGroup):
        r = Report(f"spectra of the levels of {obj.name}")
        for n in range(1, obj.depth + 1):
            for rec in check_spectrum(obj.level(n)).records:
                r.add(rec.check, rec.passed, rec.anchor, n, rec.witness)
        return r
    raise NotApplicable(f"spectrum is not defined for {type(obj).__name__} documents")


def _random_function(T: ProGroup, rng: random.Random) -> LocallyConstantFunction:
    level = rng.randint(1, T.depth)
    values = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(T.level(level).order)]
    return LocallyConstantFunction(T, level, tuple(values))


def cmd_report(obj, args) -> Report:
    """Every applicable command, plus seeded random round trips where they make sense."""
    r = Report(f"full report for {_subject_name(obj)}")
    ran = []
    for name, fn in COMMANDS.items():
        if fn is cmd_report:
            continue
        try:
            sub = fn(obj, args)
        except NotApplicable:
            continue
        ran.append(name)
        r.extend(sub, f"{name}: ")
        for key, value in sub.artifacts.items():
            r.artifacts[f"{name}.{key}"] = value
    if isinstance(obj, ProGroup):
        rng = random.Random(args.seed)
        for i in range(args.samples):
            _decompose(_random_function(obj, rng), r, f"random[{i}]: ")
        ran.append("random-decompose")
    r.artifacts["commands"] = ran
    return r


COMMANDS = {
    "dual": cmd_dual,
    "reflexivity": cmd_reflexivity,
    "hopf-axioms": cmd_hopf_axioms,
    "decompose": cmd_decompose,
    "spectrum": cmd_spectrum,
    "report": cmd_report,
}


# --------------------------------------------------------------------------
# output


def jsonable(x):
    """Exact JSON form: rationals as strings, cyclotomics as objects."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, Cyclotomic):
        return x.to_json()
    if isinstance(x, Element):
        return list(x.coords)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, float):
        raise TypeError("floating point values are not serialised")
    return str(x)


def render(report: Report, command: str, fmt: str, seed: int | None = None) -> str:
    if fmt == "text":
        return report.to_text() + "\n"
    doc = report.to_json()
    doc["command"] = command
    doc["schema_version"] = SCHEMA_VERSION
    if seed is not None:
        doc["seed"] = seed
    return json.dumps(jsonable(doc), sort_keys=True, indent=2) + "\n"


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="holodual", description="Exact duality and reflexivity checks.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        c = sub.add_parser(name)
        c.add_argument("--input", "-i", required=True, help="JSON document, or - for stdin")
        c.add_argument("--depth", type=int, help="truncation depth override")
        c.add_argument("--format", choices=("json", "text"), help=f"default from ${FORMAT_ENV}, else json")
        c.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
        c.add_argument("--samples", type=int, default=10, help="random samples in the report command")
        c.add_argument("--out", "-o", help="write the report here instead of stdout")
    return p


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    fmt = args.format or os.environ.get(FORMAT_ENV, "json")
    if fmt not in ("json", "text"):
        print(f"error: ${FORMAT_ENV} must be json or text, got {fmt!r}", file=sys.stderr)
        return 2
    if args.seed < 0 or args.seed >= 1 << 64:
        print("error: --seed must be an unsigned 64-bit integer", file=sys.stderr)
        return 2
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        obj = parse(text, args.depth)
        report = COMMANDS[args.command](obj, args)
    except OSError as exc:
        print(f"error: cannot read input: {exc}", file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return 2
    except AxiomFailure as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return 2
    seed = args.seed if args.command == "report" else None
    out = render(report, args.command, fmt, seed)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
