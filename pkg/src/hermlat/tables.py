"""Recompute the reference tables and diff them against the golden rows."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import arith, golden
from .escalator import (
    CertMode,
    certify_universal,
    escalation_tree,
    escalations,
    is_inherited,
    minimal_universal_rank,
    truant_hermitian,
    zform_escalation_classes,
)
from .hlattice import diagonal, find_hermitian_isometry, format_gram, lattice, parse_gram
from .quadring import make_field, parse_quadint
from .zform import ZQuadForm, find_isometry


@dataclass
class ReportRow:
    key: str
    expected: object
    computed: object
    ok: bool
    cite: str

    def as_dict(self) -> dict:
        return {"key": self.key, "expected": self.expected, "computed": self.computed,
                "ok": self.ok, "cite": self.cite}


@dataclass
class TableReport:
    table: str
    rows: list[ReportRow] = field(default_factory=list)

    @property
    def diff(self) -> list[ReportRow]:
        return [r for r in self.rows if not r.ok]

    @property
    def ok(self) -> bool:
        return not self.diff

    def to_dict(self) -> dict:
        return {"table": self.table, "ok": self.ok, "rows": [r.as_dict() for r in self.rows],
                "diff": [r.key for r in self.diff]}

    def to_text(self) -> str:
        lines = [f"table {self.table}: {len(self.rows)} rows, {len(self.diff)} differing"]
        for r in self.rows:
            mark = "ok  " if r.ok else "DIFF"
            lines.append(f"  {mark} {r.key}: expected {r.expected}, computed {r.computed}  [{r.cite}]")
        return "\n".join(lines)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "expected", "computed", "ok", "cite"])
        for r in self.rows:
            w.writerow([r.key, r.expected, r.computed, int(r.ok), r.cite])
        return buf.getvalue()


def _binary(only: Optional[set[int]] = None) -> TableReport:
    rep = TableReport("binary")
    for row in golden.BINARY:
        if only and row.m not in only:
            continue
        L = parse_gram(row.gram, row.m, diag=row.diag)
        crit = certify_universal(L, CertMode.CRITICAL_SET)
        emp = certify_universal(L, CertMode.EMPIRICAL, 2000)
        has_omega = any(v.b for r in L.gram for v in r)
        inherited = is_inherited(L)
        computed = {"critical": crit.certified, "empirical_2000": emp.certified, "inherited": inherited}
        expected = {"critical": True, "empirical_2000": True, "inherited": not has_omega}
        rep.rows.append(ReportRow(f"m={row.m} {row.gram}", expected, computed, computed == expected, row.cite))
    return rep


def _truants(only: Optional[set[int]] = None) -> TableReport:
    rep = TableReport("truants")
    for row in golden.TRUANTS:
        for m in row.samples:
            if only and m not in only:
                continue
            L = parse_gram(row.gram, m, diag=row.diag)
            t = truant_hermitian(L, 300)
            rep.rows.append(ReportRow(f"{row.label} m={m}", row.truant, t, t == row.truant, row.cite))
    return rep


def _shape(m: int, a: str, b: int):
    F = make_field(m)
    alpha = parse_quadint(a, F)
    return lattice(F, [[1, 0, 0], [0, 2, alpha], [0, alpha.conj(), b]])


def condition_classes(m: int) -> list:
    """Escalations of <1,2> by 5 with an irrational off-diagonal entry, up to O-isometry."""
    cands = escalations(diagonal(m, 1, 2), 5, check_truant=False, dedup="hermitian")
    return [c.result for c in cands if any(v.b for r in c.result.gram for v in r)]


def _conditions(only: Optional[set[int]] = None) -> TableReport:
    rep = TableReport("conditions")
    by_m: dict[int, list[golden.ConditionRow]] = {}
    for row in golden.CONDITIONS:
        if not only or row.m in only:
            by_m.setdefault(row.m, []).append(row)
    for m, rows in by_m.items():
        computed = condition_classes(m)
        matched = [False] * len(computed)
        for row in rows:
            found = []
            for b in row.b:
                S = _shape(m, row.a, b)
                hit = next((i for i, C in enumerate(computed) if find_hermitian_isometry(S, C) is not None), None)
                if hit is not None:
                    matched[hit] = True
                    found.append(b)
            rep.rows.append(ReportRow(f"m={m} a={row.a}", list(row.b), found, found == list(row.b), row.cite))
        extra = [format_gram(C, header=False) for C, hit in zip(computed, matched) if not hit]
        rep.rows.append(ReportRow(f"m={m} unlisted classes", [], extra, not extra, rows[0].cite))
    return rep


def _critical(only: Optional[set[int]] = None, depth: int = 3) -> TableReport:
    """Embedded critical sets against the truants met in each field's escalation tree."""
    rep = TableReport("critical")
    for row in golden.CRITICAL:
        for m in row.fields:
            if only and m not in only:
                continue
            tree = escalation_tree(m, max_depth=depth, certify_bound=0)
            seen = tree.truant_set() | {1}
            crit = set(arith.critical_set(m).numbers)
            computed = {"table": sorted(crit), "tree_truants": sorted(seen)}
            ok = crit == set(row.numbers) and seen <= crit
            rep.rows.append(ReportRow(f"m={m}", list(row.numbers), computed, ok, row.cite))
    return rep


def _ranks(only: Optional[set[int]] = None) -> TableReport:
    rep = TableReport("ranks")
    for row in golden.RANKS:
        if only and row.m not in only:
            continue
        rec = minimal_universal_rank(row.m, certify_bound=2000, max_depth=4)
        witness = format_gram(rec.witness) if rec.witness else None
        rep.rows.append(ReportRow(f"m={row.m}", row.u_m, {"u_m": rec.u_m, "witness": witness},
                                  rec.u_m == row.u_m, row.cite))
    return rep


def count_report(row: golden.CountRow) -> dict:
    res = zform_escalation_classes(row.base, row.t)
    exceptional = [ZQuadForm.from_gram(g) for g in row.exceptional]
    found = [any(find_isometry(e, f) is not None for f in res.non_universal) for e in exceptional]
    return {
        "members": res.members,
        "classes": len(res.classes),
        "universal": len(res.universal),
        "non_universal": len(res.non_universal),
        "exceptional_found": found,
        "non_universal_grams": [[[v // 2 for v in r] for r in f.gram] for f in res.non_universal],
    }


def _counts(only: Optional[set[int]] = None) -> TableReport:
    rep = TableReport("counts")
    for row in golden.COUNTS:
        c = count_report(row)
        expected = {"classes": row.classes, "non_universal": row.non_universal}
        computed = {"classes": c["classes"], "non_universal": c["non_universal"],
                    "exceptional_found": c["exceptional_found"]}
        ok = (c["classes"] == row.classes and c["non_universal"] == row.non_universal
              and all(c["exceptional_found"]))
        rep.rows.append(ReportRow(row.case, expected, computed, ok, row.cite))
    return rep


BUILDERS: dict[str, Callable[..., TableReport]] = {
    "binary": _binary,
    "truants": _truants,
    "conditions": _conditions,
    "critical": _critical,
    "ranks": _ranks,
    "counts": _counts,
}


def build_report(table: str, only: Optional[set[int]] = None) -> TableReport:
    if table not in BUILDERS:
        raise KeyError(f"unknown table {table!r}; choose from {', '.join(BUILDERS)}")
    missing = golden.missing_citations()
    if missing:
        raise ValueError(f"golden rows without citation: {missing}")
    return BUILDERS[table](only)
