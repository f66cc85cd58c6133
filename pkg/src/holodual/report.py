"""Structured check reports shared by every verification routine."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class CheckRecord:
    check: str
    passed: bool
    anchor: str
    level: int | None = None
    witness: Any = None

    def to_json(self) -> dict:
        out = {"check": self.check, "passed": self.passed, "anchor": self.anchor}
        if self.level is not None:
            out["level"] = self.level
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    subject: str
    records: list[CheckRecord] = field(default_factory=list)
    artifacts: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def add(self, check: str, passed: bool, anchor: str, level: int | None = None, witness: Any = None) -> bool:
        self.records.append(CheckRecord(check, bool(passed), anchor, level, None if passed else witness))
        return bool(passed)

    def extend(self, other: Report, prefix: str = "") -> None:
        for r in other.records:
            self.records.append(CheckRecord(prefix + r.check, r.passed, r.anchor, r.level, r.witness))

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]

    def sorted(self) -> Report:
        """Copy with records in a canonical order (level, then check name)."""
        key = lambda r: (r.level if r.level is not None else -1, r.check)
        return Report(self.subject, sorted(self.records, key=key), dict(self.artifacts))

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "verdict": "pass" if self.passed else "fail",
            "records": [r.to_json() for r in self.records],
            "artifacts": self.artifacts,
        }

    def to_text(self) -> str:
        lines = [f"{self.subject}: {'PASS' if self.passed else 'FAIL'}"]
        for r in self.records:
            where = f" [level {r.level}]" if r.level is not None else ""
            mark = "ok  " if r.passed else "FAIL"
            line = f"  {mark} {r.check}{where}  ({r.anchor})"
            if r.witness is not None:
                line += f"  witness={r.witness}"
            lines.append(line)
        return "\n".join(lines)

    def __bool__(self) -> bool:
        return self.passed


# Anchor strings name the result a check instantiates.
ANCHORS = {
    "dual_group": "characters of a periodic group form its dual",
    "locally_finite_dual": "dual of a locally finite abelian group is profinite",
    "profinite_dual": "dual of a profinite abelian group is locally finite",
    "abelian_reflexivity": "iota: G -> G** is an isomorphism (locally finite or profinite abelian G)",
    "locally_constant": "holomorphic functions on a profinite group are the locally constant ones",
    "character_expansion": "locally constant functions expand in characters",
    "tensor_splitting": "functions on G x H split as tensors of functions on G and H",
    "finite_levels": "O(G) carries the strongest locally convex topology (finite-dimensional levels)",
    "hopf_axioms": "structure constants satisfy the Hopf algebra axioms",
    "hopf_duality": "dual of CG is C^G with dual operations",
    "double_dual": "canonical identification of H** with H",
    "envelope": "Arens-Michael envelope acts trivially on these algebras",
    "reflexivity_locally_finite": "CG and C^G are holomorphically dual and reflexive (locally finite G)",
    "reflexivity_profinite": "O(G) and O(G)' are holomorphically dual and reflexive (profinite G)",
    "spectrum": "spectrum of the abelian group algebra is the dual group",
}
