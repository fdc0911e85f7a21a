"""Excluded-integer classes, shift-covering scans and criterion sets.

Class notation: ``p^d`` / ``p^e`` is an odd / even power of p; for p = 2,
``u_k`` is a unit = k (mod 8); for odd p, ``u+`` / ``u-`` is a quadratic
residue / non-residue unit mod p.  ``2^e u7`` therefore means n = 4^a (8b + 7).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

import numpy as np

from .quadring import is_squarefree
from .zform import ZQuadForm, represented_upto, represents


class Parity(Enum):
    ODD = "d"
    EVEN = "e"
    ANY = "*"


@dataclass(frozen=True)
class ExcludedClass:
    p: int
    parity: Parity
    unit: Optional[object] = None  # k in {1,3,5,7} for p = 2; "+" / "-" for odd p

    def __post_init__(self):
        if self.p == 2:
            if self.unit not in (None, 1, 3, 5, 7):
                raise ValueError("for p=2 the unit spec is a residue 1, 3, 5 or 7 mod 8")
        elif self.unit not in (None, "+", "-"):
            raise ValueError("for odd p the unit spec is '+' or '-'")

    def __str__(self) -> str:
        head = f"{self.p}^{self.parity.value}" if self.parity is not Parity.ANY else ""
        if self.unit is None:
            return head or "any"
        tail = f"u{self.unit}"
        return f"{head} {tail}".strip()


_CLASS_RE = re.compile(r"^\s*(?:(\d+)\^([de]))?\s*(?:u\s*_?\s*([1357+\-]))?\s*$")


def parse_class(text: str, p: Optional[int] = None) -> ExcludedClass:
    """Parse ``2^e u7``, ``2^d u5``, ``3^d u-``, ``13^d u+``; ``u5`` alone needs ``p``."""
    mt = _CLASS_RE.match(text)
    if not mt or not (mt.group(1) or mt.group(3)):
        raise ValueError(f"cannot parse class {text!r}")
    prime = int(mt.group(1)) if mt.group(1) else p
    if prime is None:
        raise ValueError(f"class {text!r} needs an explicit prime")
    parity = Parity(mt.group(2)) if mt.group(2) else Parity.ANY
    u = mt.group(3)
    if u in ("+", "-"):
        unit = u
    elif u is None:
        unit = None
    else:
        unit = int(u)
    return ExcludedClass(prime, parity, unit)


def _legendre_residue(u: int, p: int) -> bool:
    return pow(u % p, (p - 1) // 2, p) == 1


def match_class(n: int, c: ExcludedClass) -> bool:
    if n < 1:
        return False
    v = 0
    while n % c.p == 0:
        n //= c.p
        v += 1
    if c.parity is Parity.ODD and v % 2 == 0:
        return False
    if c.parity is Parity.EVEN and v % 2 == 1:
        return False
    if c.unit is None:
        return True
    if c.p == 2:
        return n % 8 == c.unit
    return _legendre_residue(n, c.p) == (c.unit == "+")


def class_mask(c: ExcludedClass, bound: int) -> np.ndarray:
    """Boolean array m with m[n] = match_class(n, c) for 0 <= n <= bound."""
    n = np.arange(bound + 1, dtype=np.int64)
    v = np.zeros(bound + 1, dtype=np.int64)
    u = n.copy()
    u[0] = 1
    while True:
        div = (u % c.p == 0) & (n > 0)
        if not div.any():
            break
        u = np.where(div, u // c.p, u)
        v += div
    mask = n > 0
    if c.parity is Parity.ODD:
        mask &= v % 2 == 1
    elif c.parity is Parity.EVEN:
        mask &= v % 2 == 0
    if c.unit is not None:
        if c.p == 2:
            mask &= u % 8 == c.unit
        else:
            squares = np.zeros(c.p, dtype=bool)
            squares[[(k * k) % c.p for k in range(1, c.p)]] = True
            mask &= squares[u % c.p] == (c.unit == "+")
    return mask


def excluded_set(f: ZQuadForm, bound: int) -> set[int]:
    rep = represented_upto(f, bound)
    return {int(k) for k in np.flatnonzero(~rep) if k >= 1}


def class_set(c: ExcludedClass, bound: int) -> set[int]:
    return {int(k) for k in np.flatnonzero(class_mask(c, bound))}


@dataclass
class ShiftCoverage:
    holds: bool
    checked: int
    counterexamples: list[int]

    def __bool__(self) -> bool:
        return self.holds


def verify_shift_covering(c: ExcludedClass, shifts: Iterable[int], start: int, bound: int,
                          max_report: int = 10) -> ShiftCoverage:
    """Every n in [start, bound] of class c has some shift s with n - s outside c.

    n - s = 0 counts as covered (zero is represented by every form).
    """
    shifts = sorted(set(shifts))
    if start < max(shifts):
        raise ValueError("start must be at least the largest shift")
    mask = class_mask(c, bound)
    ns = np.arange(start, bound + 1)
    in_class = mask[start:]
    covered = np.zeros(ns.size, dtype=bool)
    for s in shifts:
        covered |= ~mask[start - s: bound + 1 - s]
    bad = ns[in_class & ~covered]
    return ShiftCoverage(bad.size == 0, int(in_class.sum()), [int(b) for b in bad[:max_report]])


# ---------------------------------------------------------------------------
# criterion sets


@dataclass(frozen=True)
class CriterionSet:
    name: str
    numbers: frozenset[int]

    def __post_init__(self):
        if not self.numbers:
            raise ValueError("criterion set must be nonempty")

    def __iter__(self):
        return iter(sorted(self.numbers))

    def __len__(self):
        return len(self.numbers)


CLASSICAL_15 = CriterionSet("classical15", frozenset({1, 2, 3, 5, 6, 7, 10, 14, 15}))
BHARGAVA_290 = CriterionSet("bhargava290", frozenset({
    1, 2, 3, 5, 6, 7, 10, 13, 14, 15, 17, 19, 21, 22, 23, 26, 29, 30, 31, 34, 35,
    37, 42, 58, 93, 110, 145, 203, 290}))
HERMITIAN_15 = CriterionSet("hermitian15", frozenset({1, 2, 3, 5, 6, 7, 10, 13, 14, 15}))

# (critical numbers, fields)
CRITICAL_TABLE: list[tuple[tuple[int, ...], tuple[int, ...]]] = [
    ((1, 2), (3, 11)),
    ((1, 3), (1, 7)),
    ((1, 5), (2,)),
    ((1, 2, 3), (5, 19)),
    ((1, 2, 3, 5), (6,)),
    ((1, 2, 3, 5, 7), (15, 23)),
    ((1, 2, 3, 5, 6, 7), (10, 31)),
    ((1, 2, 3, 5, 6, 7, 10), (13, 14)),
    ((1, 2, 3, 5, 6, 7, 13), (39,)),
    ((1, 2, 3, 5, 6, 7, 10, 14), (35, 43, 51, 59)),
    ((1, 2, 3, 5, 6, 7, 10, 15), (55,)),
]
CRITICAL_DEFAULT = (1, 2, 3, 5, 6, 7, 10, 14, 15)


def critical_set(m: int) -> CriterionSet:
    if not is_squarefree(m):
        raise ValueError(f"m={m} is not a positive square-free integer")
    for nums, ms in CRITICAL_TABLE:
        if m in ms:
            return CriterionSet(f"critical({m})", frozenset(nums))
    return CriterionSet(f"critical({m})", frozenset(CRITICAL_DEFAULT))


def criterion_by_name(name: str) -> CriterionSet:
    name = name.strip()
    if name == "classical15":
        return CLASSICAL_15
    if name == "bhargava290":
        return BHARGAVA_290
    if name == "hermitian15":
        return HERMITIAN_15
    mt = re.fullmatch(r"critical\((\d+)\)", name)
    if mt:
        return critical_set(int(mt.group(1)))
    raise ValueError(f"unknown criterion set {name!r}")


def missing_from(f: ZQuadForm, numbers: Iterable[int]) -> list[int]:
    numbers = sorted(numbers)
    rep = represented_upto(f, numbers[-1])
    return [n for n in numbers if not rep[n]]


def classical_15_check(f: ZQuadForm) -> bool:
    if not f.classical:
        raise ValueError("the fifteen criterion applies to classical forms only")
    return not missing_from(f, CLASSICAL_15)


def nonclassical_290_check(f: ZQuadForm) -> bool:
    return not missing_from(f, BHARGAVA_290)


def hermitian_15_check(L) -> bool:
    from .hlattice import associated_zform

    return not missing_from(associated_zform(L), HERMITIAN_15)


# ---------------------------------------------------------------------------
# the exceptional lattice over Q(sqrt(-39)): genus pair and subtrahend table

GENUS_PAIR_39 = (
    ZQuadForm.from_gram([[1, 0, 0], [0, 8, 2], [0, 2, 20]]),
    ZQuadForm.from_gram([[4, 0, 2], [0, 5, 1], [2, 1, 9]]),
)


def genus_pair_check(fA: ZQuadForm, fB: ZQuadForm, n: int) -> bool:
    if n == 0:
        return True
    return represents(fA, n)[0] or represents(fB, n)[0]


@dataclass(frozen=True)
class SubtrahendRow:
    n_mod_4: int
    parity: Parity  # exponent of 13 in n
    unit: str  # "+" or "-": unit part residue mod 13
    residues: frozenset[int]
    s: int  # subtract 39 s^2


SUBTRAHEND_TABLE_39: tuple[SubtrahendRow, ...] = tuple(
    SubtrahendRow(a, b, c, frozenset(d), e) for a, b, c, d, e in [
        (1, Parity.ODD, "+", {1, 4, 10}, 2),
        (1, Parity.ODD, "+", {3}, 4),
        (1, Parity.ODD, "+", {9, 12}, 6),
        (3, Parity.EVEN, "+", {1, 4, 9, 10, 12}, 1),
        (3, Parity.EVEN, "+", {3}, 3),
        (3, Parity.EVEN, "-", {2, 5, 6, 7, 8, 11}, 1),
        (3, Parity.ODD, "+", {1, 9, 10}, 1),
        (3, Parity.ODD, "+", {3, 12}, 3),
        (3, Parity.ODD, "+", {4}, 5),
        (3, Parity.ODD, "-", {2}, 5),
        (3, Parity.ODD, "-", {5, 8, 11}, 1),
        (3, Parity.ODD, "-", {6, 7}, 3),
    ])


def subtrahend_for(n: int) -> int:
    """The s with n - 39 s^2 handled by the genus pair, for odd n; 0 means none needed."""
    if n % 2 == 0:
        raise ValueError("table covers odd n only")
    v, u = 0, n
    while u % 13 == 0:
        u //= 13
        v += 1
    parity = Parity.ODD if v % 2 else Parity.EVEN
    unit = "+" if _legendre_residue(u, 13) else "-"
    if n % 4 == 1 and not (parity is Parity.ODD and unit == "+"):
        return 0
    for row in SUBTRAHEND_TABLE_39:
        if row.n_mod_4 == n % 4 and row.parity is parity and row.unit == unit and u % 13 in row.residues:
            return row.s
    raise LookupError(f"no subtrahend row for n={n}")


def genus_pair_mask(bound: int) -> np.ndarray:
    fA, fB = GENUS_PAIR_39
    return represented_upto(fA, bound, budget=10 ** 8) | represented_upto(fB, bound, budget=10 ** 8)


def verify_subtrahend_table(bound: int = 10 ** 5, start: int = 39 * 36) -> list[int]:
    """Odd n in [start, bound] for which the table's subtrahend fails; empty on success."""
    rep = genus_pair_mask(bound)
    bad = []
    for n in range(start | 1, bound + 1, 2):
        r = n - 39 * subtrahend_for(n) ** 2
        if r < 0 or not rep[r]:
            bad.append(n)
    return bad
