"""Reference tables with a citation on every row.

Gram text uses the ``parse_gram`` syntax; ``diag`` rows are diagonal
lattices written as ``1;1;2``.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class BinaryRow:
    m: int
    gram: str
    diag: bool
    cite: str


@dataclass(frozen=True)
class TruantRow:
    label: str
    gram: str
    diag: bool
    truant: int
    samples: tuple[int, ...]
    condition: str
    cite: str


@dataclass(frozen=True)
class ConditionRow:
    m: int
    a: str
    b: tuple[int, ...]
    cite: str


@dataclass(frozen=True)
class CriticalRow:
    numbers: tuple[int, ...]
    fields: tuple[int, ...]
    cite: str


@dataclass(frozen=True)
class RankRow:
    m: int
    u_m: int
    cite: str


@dataclass(frozen=True)
class CountRow:
    case: str
    base: tuple[tuple[int, ...], ...]
    t: int
    classes: int
    non_universal: int
    exceptional: tuple[tuple[tuple[int, ...], ...], ...]
    cite: str


def _t2(m: int) -> str:
    return f"Table 2, row Q(sqrt(-{m}))"


BINARY: tuple[BinaryRow, ...] = (
    BinaryRow(1, "1;1", True, _t2(1)),
    BinaryRow(1, "1;2", True, _t2(1)),
    BinaryRow(1, "1;3", True, _t2(1)),
    BinaryRow(2, "1;1", True, _t2(2)),
    BinaryRow(2, "1;2", True, _t2(2)),
    BinaryRow(2, "1;3", True, _t2(2)),
    BinaryRow(2, "1;4", True, _t2(2)),
    BinaryRow(2, "1;5", True, _t2(2)),
    BinaryRow(3, "1;1", True, _t2(3)),
    BinaryRow(3, "1;2", True, _t2(3)),
    BinaryRow(5, "1;2", True, _t2(5)),
    BinaryRow(5, "1,0,0;0,2,-1+w;0,c(-1+w),3", False, _t2(5)),
    BinaryRow(6, "1,0,0;0,2,w;0,cw,3", False, _t2(6)),
    BinaryRow(7, "1;1", True, _t2(7)),
    BinaryRow(7, "1;2", True, _t2(7)),
    BinaryRow(7, "1;3", True, _t2(7)),
    BinaryRow(10, "1,0,0;0,2,w;0,cw,5", False, _t2(10)),
    BinaryRow(11, "1;1", True, _t2(11)),
    BinaryRow(11, "1;2", True, _t2(11)),
    BinaryRow(15, "1,0,0;0,2,w;0,cw,2", False, _t2(15)),
    BinaryRow(19, "1;2", True, _t2(19)),
    BinaryRow(23, "1,0,0;0,2,w;0,cw,3", False, _t2(23)),
    BinaryRow(23, "1,0,0;0,2,-1+w;0,c(-1+w),3", False, _t2(23)),
    BinaryRow(31, "1,0,0;0,2,w;0,cw,4", False, _t2(31)),
    BinaryRow(31, "1,0,0;0,2,-1+w;0,c(-1+w),4", False, _t2(31)),
)


def _t4(label: str) -> str:
    return f"Table 4, row {label}"


TRUANTS: tuple[TruantRow, ...] = (
    TruantRow("<1>", "1", True, 2, (5, 6, 39), "m not in 1,2;7", _t4("<1>, truant 2")),
    TruantRow("<1>", "1", True, 3, (1, 7), "m in 1;7", _t4("<1>, truant 3")),
    TruantRow("<1>", "1", True, 5, (2,), "m = 2", _t4("<1>, truant 5")),
    TruantRow("<1,1>", "1;1", True, 3, (5, 6, 13), "m not in 1,2;3,7,11", _t4("<1,1>")),
    TruantRow("<1,1,1>", "1;1;1", True, 7, (10, 13, 31), "m not in 1,2,5,6;3,7,11,15,19,23", _t4("<1,1,1>")),
    TruantRow("<1,1,2>", "1;1;2", True, 14, (17, 21, 59), "m not in 1,2,5,6,10,13,14;3,7,...,55",
              _t4("<1,1,2>")),
    TruantRow("<1,1,3>", "1;1;3", True, 6, (10, 13, 31), "m not in 1,2,5,6;3,7,11,15,19,23", _t4("<1,1,3>")),
    TruantRow("<1,2>", "1;2", True, 5, (6, 10, 15), "m not in 1,2,5;3,7,11,19", _t4("<1,2>")),
    TruantRow("<1,2,2>", "1;2;2", True, 7, (10, 13, 23), "m not in 1,2,5,6;3,7,11,15,19", _t4("<1,2,2>")),
    TruantRow("<1,2,3>", "1;2;3", True, 10, (13, 14, 35), "m not in 1,2,5,6,10;3,7,11,15,19,23,31,39",
              _t4("<1,2,3>")),
    TruantRow("<1,2,4>", "1;2;4", True, 14, (17, 21, 35), "m not in 1,2,5,6,10,13,14;3,...,55",
              _t4("<1,2,4>")),
    TruantRow("<1,2,5>", "1;2;5", True, 10, (13, 14, 35), "m not in 1,2,5,6,10;3,7,11,15,19,23,31,39",
              _t4("<1,2,5>")),
    TruantRow("<1>+[2,0,0;0,5,0;0,0,5]", "1,0,0,0;0,2,0,0;0,0,5,0;0,0,0,5", False, 15, (22, 26, 47),
              "m = 1,2 mod 4, m >= 22; m = 47,55 or m >= 67", _t4("<1>+[2,0,0;0,5,0;0,0,5]")),
    TruantRow("<1>+[2,0,1;0,5,1;1,1,5]", "1,0,0,0;0,2,0,1;0,0,5,1;0,1,1,5", False, 15, (21, 22, 55),
              "m = 1,2 mod 4, m >= 21; m = 47,55 or m >= 67", _t4("<1>+[2,0,1;0,5,1;1,1,5]")),
    TruantRow("<1>+[2,0,1;0,5,2;1,2,8]", "1,0,0,0;0,2,0,1;0,0,5,2;0,1,2,8", False, 15, (33, 34, 47),
              "m = 1,2 mod 4, m >= 33; m = 47,55 or m >= 67", _t4("<1>+[2,0,1;0,5,2;1,2,8]")),
    TruantRow("<1>+[2,0,1;0,5,1;1,1,9]", "1,0,0,0;0,2,0,1;0,0,5,1;0,1,1,9", False, 15, (41, 42, 55),
              "m = 1,2 mod 4, m >= 41; m = 47,55 or m >= 67", _t4("<1>+[2,0,1;0,5,1;1,1,9]")),
    TruantRow("<1>+[2,0,0;0,5,w;0,cw,5]", "1,0,0,0;0,2,0,0;0,0,5,w;0,0,cw,5", False, 15, (17, 21),
              "m = 17, 21", _t4("<1>+[2,0,0;0,5,+-w;0,.,5]")),
    TruantRow("<1>+[2,0,1;0,5,1+w;1,.,5]", "1,0,0,0;0,2,0,1;0,0,5,1+w;0,1,c(1+w),5", False, 15, (17,),
              "m = 17", _t4("<1>+[2,0,1;0,5,1+-w;1,.,5]")),
    TruantRow("<1>+[2,0,1;0,5,2+w;1,.,8]", "1,0,0,0;0,2,0,1;0,0,5,2+w;0,1,c(2+w),8", False, 15,
              (17, 21, 30), "m = 17,21,22,26,29,30", _t4("<1>+[2,0,1;0,5,2+-w;1,.,8]")),
    TruantRow("<1>+[2,0,1;0,5,1+w;1,.,9]", "1,0,0,0;0,2,0,1;0,0,5,1+w;0,1,c(1+w),9", False, 15,
              (17, 26, 38), "m = 17,21,22,26,29,30,33,34,37,38", _t4("<1>+[2,0,1;0,5,1+-w;1,.,9]")),
    TruantRow("<1>+[2,0,0;0,5,1+w;0,.,8]", "1,0,0,0;0,2,0,0;0,0,5,1+w;0,0,c(1+w),8", False, 15,
              (47, 55, 67), "m = 3 mod 4: 47, 55, 151, 67..131", _t4("<1>+[2,0,0;0,5,1+w;0,.,8]")),
    TruantRow("<1>+[2,0,0;0,5,-2+w;0,.,8]", "1,0,0,0;0,2,0,0;0,0,5,-2+w;0,0,c(-2+w),8", False, 15,
              (47, 55, 71), "m = 3 mod 4: 47, 55, 151, 67..131", _t4("<1>+[2,0,0;0,5,-2+w;0,.,8]")),
    TruantRow("<1>+[2,0,0;0,5,2+w;0,.,8]", "1,0,0,0;0,2,0,0;0,0,5,2+w;0,0,c(2+w),8", False, 15,
              (47, 55, 79), "m = 3 mod 4: 47, 55, 67..119", _t4("<1>+[2,0,0;0,5,2+w;0,.,8]")),
    TruantRow("<1>+[2,0,1;0,5,2+w;1,.,9]", "1,0,0,0;0,2,0,1;0,0,5,2+w;0,1,c(2+w),9", False, 15,
              (47, 55, 83), "m = 3 mod 4: 47, 55, 67..131", _t4("<1>+[2,0,1;0,5,2+w;1,.,9]")),
    TruantRow("<1>+[2,0,0;0,5,2+w;0,.,10]", "1,0,0,0;0,2,0,0;0,0,5,2+w;0,0,c(2+w),10", False, 15,
              (47, 55, 87), "m = 3 mod 4: 47, 55, 67..159", _t4("<1>+[2,0,0;0,5,2+w;0,.,10]")),
    TruantRow("<1>+[2,1;1,4]", "1,0,0;0,2,1;0,1,4", False, 7, (13, 14, 23), "m not in 1,2,5,6,10;3,7,11,19",
              _t4("<1>+[2,1;1,4]")),
    TruantRow("<1>+[2,1,0;1,4,1;0,1,5]", "1,0,0,0;0,2,1,0;0,1,4,1;0,0,1,5", False, 10, (17, 21, 115),
              "m = 1,2 mod 4, m >= 17; m = 3 mod 4, m >= 115", _t4("<1>+[2,1,0;1,4,1;0,1,5]")),
    TruantRow("<1>+[2,1,0;1,4,1+w;0,.,5]", "1,0,0,0;0,2,1,0;0,1,4,1+w;0,0,c(1+w),5", False, 10, (13, 14),
              "m = 13, 14", _t4("<1>+[2,1,0;1,4,1+-w;0,.,5]")),
    TruantRow("<1>+[2,1;1,5]", "1,0,0;0,2,1;0,1,5", False, 7, (13, 14, 23), "m not in 1,2,5,6;3,7,11,19",
              _t4("<1>+[2,1;1,5]")),
    TruantRow("<1>+[2,1,0;1,5,1;0,1,5]", "1,0,0,0;0,2,1,0;0,1,5,1;0,0,1,5", False, 15, (21, 22, 151),
              "m = 1,2 mod 4, m >= 21; m = 3 mod 4, m >= 147", _t4("<1>+[2,1,0;1,5,1;0,1,5]")),
    TruantRow("<1>+[2,1,0;1,5,1+w;0,.,5]", "1,0,0,0;0,2,1,0;0,1,5,1+w;0,0,c(1+w),5", False, 15, (17,),
              "m = 17", _t4("<1>+[2,1,0;1,5,1+-w;0,.,5]")),
    TruantRow("<1>+[2,w;cw,5]", "1,0,0;0,2,w;0,cw,5", False, 13, (39,), "m = 39", _t4("<1>+[2,w;cw,5]")),
)


def _t1(m: int) -> str:
    return f"Table 1, row Q(sqrt(-{m}))"


CONDITIONS: tuple[ConditionRow, ...] = (
    ConditionRow(6, "w", (3, 4, 5), _t1(6)),
    ConditionRow(6, "-1+w", (4, 5), _t1(6)),
    ConditionRow(10, "w", (5,), _t1(10)),
    ConditionRow(15, "w", (2, 3, 4, 5), _t1(15)),
    ConditionRow(15, "-1+w", (3, 4, 5), _t1(15)),
    ConditionRow(23, "w", (3, 4, 5), _t1(23)),
    ConditionRow(23, "-1+w", (3, 4, 5), _t1(23)),
    ConditionRow(31, "w", (4, 5), _t1(31)),
    ConditionRow(31, "-1+w", (4, 5), _t1(31)),
    ConditionRow(35, "w", (5,), _t1(35)),
    ConditionRow(35, "-1+w", (5,), _t1(35)),
    ConditionRow(39, "w", (5,), _t1(39)),
    ConditionRow(39, "-1+w", (5,), _t1(39)),
)

_THM = "critical-number theorem, row "

CRITICAL: tuple[CriticalRow, ...] = (
    CriticalRow((1, 2), (3, 11), _THM + "{1,2}"),
    CriticalRow((1, 3), (1, 7), _THM + "{1,3}"),
    CriticalRow((1, 5), (2,), _THM + "{1,5}"),
    CriticalRow((1, 2, 3), (5, 19), _THM + "{1,2,3}"),
    CriticalRow((1, 2, 3, 5), (6,), _THM + "{1,2,3,5}"),
    CriticalRow((1, 2, 3, 5, 7), (15, 23), _THM + "{1,2,3,5,7}"),
    CriticalRow((1, 2, 3, 5, 6, 7), (10, 31), _THM + "{1,2,3,5,6,7}"),
    CriticalRow((1, 2, 3, 5, 6, 7, 10), (13, 14), _THM + "{1,2,3,5,6,7,10}"),
    CriticalRow((1, 2, 3, 5, 6, 7, 13), (39,), _THM + "{1,2,3,5,6,7,13}"),
    CriticalRow((1, 2, 3, 5, 6, 7, 10, 14), (35, 43, 51, 59), _THM + "{1,2,3,5,6,7,10,14}"),
    CriticalRow((1, 2, 3, 5, 6, 7, 10, 15), (55,), _THM + "{1,2,3,5,6,7,10,15}"),
)

_UM = "minimal-rank theorem, row u_m = "

RANKS: tuple[RankRow, ...] = tuple(
    RankRow(m, u, _UM + str(u)) for u, ms in (
        (2, (1, 2, 3, 5, 10, 31)),
        (3, (13, 17, 39, 55)),
        (4, (33, 37, 38, 42)),
    ) for m in ms
)


def _four(block) -> tuple[tuple[int, ...], ...]:
    """<1> + block as a 4x4 integral Gram."""
    rows = [(1, 0, 0, 0)]
    for r in block:
        rows.append((0,) + tuple(r))
    return tuple(rows)


COUNTS: tuple[CountRow, ...] = (
    CountRow("III-1 b(1)", ((1, 0, 0), (0, 2, 0), (0, 0, 2)), 7, 16, 0, (), "Case III-1 b(1)"),
    CountRow("III-2 b(1)", ((1, 0, 0), (0, 2, 0), (0, 0, 3)), 10, 28, 0, (), "Case III-2 b(1)"),
    CountRow("III-3 b(1)", ((1, 0, 0), (0, 2, 0), (0, 0, 4)), 14, 54, 0, (), "Case III-3 b(1)"),
    CountRow("III-4 b(1)", ((1, 0, 0), (0, 2, 0), (0, 0, 5)), 10, 32, 4, (
        _four([(2, 0, 0), (0, 5, 0), (0, 0, 5)]),
        _four([(2, 0, 1), (0, 5, 1), (1, 1, 5)]),
        _four([(2, 0, 1), (0, 5, 2), (1, 2, 8)]),
        _four([(2, 0, 1), (0, 5, 1), (1, 1, 9)]),
    ), "Case III-4 b(1)"),
    CountRow("III-5 b(1)", ((1, 0, 0), (0, 2, 1), (0, 1, 4)), 7, 30, 1, (
        _four([(2, 1, 0), (1, 4, 1), (0, 1, 5)]),
    ), "Case III-5 b(1)"),
    CountRow("III-6 b(1)", ((1, 0, 0), (0, 2, 1), (0, 1, 5)), 7, 16, 1, (
        _four([(2, 1, 0), (1, 5, 1), (0, 1, 5)]),
    ), "Case III-6 b(1)"),
)

TABLES = {
    "binary": BINARY,
    "truants": TRUANTS,
    "conditions": CONDITIONS,
    "critical": CRITICAL,
    "ranks": RANKS,
    "counts": COUNTS,
}


def missing_citations() -> list[tuple[str, int]]:
    """(table, row index) of every row without a citation."""
    return [(name, i) for name, rows in TABLES.items() for i, row in enumerate(rows)
            if not getattr(row, "cite", "").strip()]
