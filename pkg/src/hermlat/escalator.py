"""Escalation of Hermitian lattices and universality certificates.

An escalation of L at its truant t is the lattice generated by L and a vector
v with H(v) = t.  With L given by a Gram G, it is the Gram
[[G, c], [c*, t]] for a column c = (H(v_i, v)); positive semidefiniteness of
that matrix bounds N(c_i) <= G_ii * t, so the candidates are finite.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional, Sequence

import numpy as np

from . import arith
from .hlattice import (
    HermitianLattice,
    adjoin_vector,
    assoc_matrix,
    associated_zform,
    diagonal,
    find_hermitian_isometry,
    format_gram,
    join_coordinates,
    lattice,
    normalize_unit,
    size_reduce,
    to_dict,
)
from .quadring import QuadInt, elements_up_to_norm, make_field
from .zform import (
    ZQuadForm,
    find_isometry,
    invariants,
    orthogonal_sum,
    psd_rank,
    represented_upto,
    represents,
    truant,
)

log = logging.getLogger(__name__)

DEFAULT_TRUANT_LIMIT = 300
DEFAULT_CERTIFY_BOUND = 2000


def truant_hermitian(L: HermitianLattice, limit: int) -> Optional[int]:
    return truant(associated_zform(L), limit)


def represents_hermitian(L: HermitianLattice, n: int) -> tuple[bool, Optional[list[QuadInt]]]:
    ok, z = represents(associated_zform(L), n)
    if not ok:
        return False, None
    return True, join_coordinates(L.field, z)


# ---------------------------------------------------------------------------
# escalation candidates


@dataclass
class EscalationCandidate:
    parent: HermitianLattice
    truant_used: int
    column: tuple[QuadInt, ...]
    result: HermitianLattice
    merged: list[HermitianLattice] = field(default_factory=list)

    @property
    def zform(self) -> ZQuadForm:
        return associated_zform(self.result)


def _psd_prefix(F, G, cols, t) -> bool:
    """PSD test of the principal submatrix on generators 0..k-1 plus the new one."""
    k = len(cols)
    rows = [list(G[i][:k]) + [cols[i]] for i in range(k)]
    rows.append([c.conj() for c in cols] + [F(t)])
    return psd_rank(assoc_matrix(F, rows)) is not None


def candidate_columns(L: HermitianLattice, t: int) -> list[tuple[QuadInt, ...]]:
    """All columns giving a PSD extension, up to a common unit factor."""
    F = L.field
    G = L.gram
    d = L.dim
    pools = [elements_up_to_norm(F, G[i][i].a * t) for i in range(d)]
    out: list[tuple[QuadInt, ...]] = []
    cols: list[QuadInt] = []

    def rec(i, lead_fixed):
        if i == d:
            out.append(tuple(cols))
            return
        for c in pools[i]:
            if c and not lead_fixed and normalize_unit(c)[1] != c:
                continue  # a unit multiple of the whole column gives the same lattice
            cols.append(c)
            if _psd_prefix(F, G, cols, t):
                rec(i + 1, lead_fixed or bool(c))
            cols.pop()

    rec(0, False)
    return out


class IsometryRegistry:
    """Deduplicates lattices by reduced Gram, then by isometry.

    ``kind`` "z" compares associated Z-forms; "hermitian" looks for O-linear
    isometries, which are Z-isometries too but far cheaper to search for.
    """

    def __init__(self, kind: str = "z", theta_bound: int = 12):
        if kind not in ("z", "hermitian"):
            raise ValueError(f"unknown isometry kind {kind!r}")
        self.kind = kind
        self.theta_bound = theta_bound
        self.by_gram: dict[tuple, int] = {}
        self.by_inv: dict[tuple, list[int]] = {}
        self.items: list[HermitianLattice] = []

    def lookup(self, L: HermitianLattice) -> tuple[Optional[int], tuple]:
        k = L.key()
        if k in self.by_gram:
            return self.by_gram[k], ()
        f = associated_zform(L)
        inv = invariants(f, self.theta_bound)
        for idx in self.by_inv.get(inv, []):
            other = self.items[idx]
            if self.kind == "hermitian":
                hit = find_hermitian_isometry(L, other) is not None
            else:
                hit = find_isometry(associated_zform(other), f) is not None
            if hit:
                self.by_gram[k] = idx
                return idx, inv
        return None, inv

    def add(self, L: HermitianLattice, inv: tuple = ()) -> int:
        idx = len(self.items)
        self.items.append(L)
        self.by_gram[L.key()] = idx
        if not inv:
            inv = invariants(associated_zform(L), self.theta_bound)
        self.by_inv.setdefault(inv, []).append(idx)
        return idx

    def insert(self, L: HermitianLattice) -> tuple[int, bool]:
        """(index, is_new)."""
        idx, inv = self.lookup(L)
        if idx is not None:
            return idx, False
        return self.add(L, inv), True


def escalations(L: HermitianLattice, t: Optional[int] = None, *, check_truant: bool = True,
                dedup: str = "isometry", truant_limit: int = DEFAULT_TRUANT_LIMIT) -> list[EscalationCandidate]:
    """All escalations of L by a vector of norm t, size-reduced and deduplicated.

    ``dedup`` is "isometry" (reduced Gram, then Z-isometry), "hermitian"
    (reduced Gram, then O-linear isometry), "gram" (reduced Gram only) or
    "none".  Galois-conjugate lattices are Z-isometric but usually not
    O-isometric, so "hermitian" keeps both.
    """
    if dedup not in ("isometry", "hermitian", "gram", "none"):
        raise ValueError(f"unknown dedup mode {dedup!r}")
    if t is None:
        t = truant_hermitian(L, truant_limit)
        if t is None:
            raise ValueError("lattice has no truant below the limit")
    elif check_truant:
        actual = truant_hermitian(L, max(t, 1))
        if actual != t:
            raise ValueError(f"t={t} is not the truant of the lattice (truant is {actual})")
    if t < 1:
        raise ValueError("t must be positive")
    out: list[EscalationCandidate] = []
    reg = IsometryRegistry("hermitian" if dedup == "hermitian" else "z")
    seen: dict[tuple, int] = {}
    for col in candidate_columns(L, t):
        R = size_reduce(adjoin_vector(L, t, col))
        cand = EscalationCandidate(L, t, col, R)
        if dedup == "none":
            out.append(cand)
            continue
        k = R.key()
        if k in seen:
            continue
        if dedup == "gram":
            seen[k] = len(out)
            out.append(cand)
            continue
        idx, new = reg.insert(R)
        seen[k] = idx
        if new:
            out.append(cand)
        else:
            out[idx].merged.append(R)
    return out


def escalation_shapes(cands: Iterable[EscalationCandidate]) -> list[HermitianLattice]:
    return [c.result for c in cands]


# ---------------------------------------------------------------------------
# certificates


class CertMode(Enum):
    CRITICAL_SET = "critical"
    EMPIRICAL = "empirical"
    INHERITED_SUBLATTICE = "inherited"


@dataclass
class UniversalityCertificate:
    lattice: HermitianLattice
    mode: CertMode
    certified: bool
    critical_set: frozenset[int]
    checked_bound: int
    witnesses: dict[int, list[QuadInt]]
    truant: Optional[int] = None
    citation: Optional[str] = None
    notes: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.certified

    def to_dict(self) -> dict:
        return {
            "lattice": to_dict(self.lattice),
            "gram_text": format_gram(self.lattice),
            "mode": self.mode.value,
            "certified": self.certified,
            "claim": self.claim(),
            "critical_set": sorted(self.critical_set),
            "checked_bound": self.checked_bound,
            "truant": self.truant,
            "witnesses": {str(n): [str(x) for x in w] for n, w in sorted(self.witnesses.items())},
            "citation": self.citation,
            "notes": self.notes,
        }

    def claim(self) -> str:
        if not self.certified:
            return f"not universal: {self.truant} is not represented"
        if self.mode is CertMode.EMPIRICAL:
            return f"universal up to {self.checked_bound}"
        return "universal"


def _witnesses(L: HermitianLattice, numbers: Iterable[int]) -> dict[int, list[QuadInt]]:
    out = {}
    for n in numbers:
        ok, w = represents_hermitian(L, n)
        if ok:
            out[n] = w
    return out


def _inherited_sublattices(L: HermitianLattice) -> list[tuple[str, ZQuadForm]]:
    """Classical Z-sublattices of the associated form of an inherited lattice.

    With G the rational Gram, the vectors v_i span G_Z and sqrt(-m) v_k is
    orthogonal to all v_i with norm m G_kk, so G_Z + <m G_kk>_Z sits inside.
    """
    m = L.m
    G = [[v.a for v in row] for row in L.gram]
    base = ZQuadForm.from_gram(G)
    out = []
    for k in range(L.dim):
        extra = ZQuadForm.diagonal(m * G[k][k])
        out.append((_gram_label(G, m * G[k][k]) + "_Z", orthogonal_sum(base, extra)))
    out.append((f"{_gram_label(G)}_Z", base))
    return out


def _gram_label(G, extra: Optional[int] = None) -> str:
    n = len(G)
    if all(G[i][j] == 0 for i in range(n) for j in range(n) if i != j):
        diag = [G[i][i] for i in range(n)] + ([extra] if extra is not None else [])
        return "<" + ",".join(map(str, diag)) + ">"
    body = "[" + ";".join(",".join(str(v) for v in row) for row in G) + "]"
    return body if extra is None else f"{body} + <{extra}>"


def certify_universal(L: HermitianLattice, mode: CertMode | str = CertMode.CRITICAL_SET,
                      bound: int = DEFAULT_CERTIFY_BOUND) -> UniversalityCertificate:
    mode = CertMode(mode) if isinstance(mode, str) else mode
    f = associated_zform(L)
    crit = arith.critical_set(L.m)
    notes: list[str] = []
    if mode is CertMode.CRITICAL_SET:
        if not any(L.m in ms for _, ms in arith.CRITICAL_TABLE):
            notes.append(f"m={L.m} uses the default critical set")
        top = max(crit.numbers)
        if bound < top:
            raise ValueError(f"bound must be at least {top} in critical-set mode")
        missing = arith.missing_from(f, crit)
        if missing:
            return UniversalityCertificate(L, mode, False, crit.numbers, top, {}, truant(f, top), notes=notes)
        return UniversalityCertificate(
            L, mode, True, crit.numbers, top, _witnesses(L, crit),
            citation=f"represents the critical numbers {sorted(crit.numbers)} of Q(sqrt(-{L.m}))",
            notes=notes)
    if mode is CertMode.EMPIRICAL:
        rep = represented_upto(f, bound)
        miss = np.flatnonzero(~rep[1:])
        notes.append("bounded check: claims representation up to the bound only")
        if miss.size:
            return UniversalityCertificate(L, mode, False, frozenset(), bound, {}, int(miss[0]) + 1, notes=notes)
        return UniversalityCertificate(L, mode, True, frozenset(), bound, _witnesses(L, crit), notes=notes)
    # inherited sublattice
    R = size_reduce(L)
    if all(v.b == 0 for row in R.gram for v in row):
        for label, sub in _inherited_sublattices(R):
            if arith.classical_15_check(sub):
                return UniversalityCertificate(
                    L, mode, True, arith.CLASSICAL_15.numbers, 15,
                    _witnesses(L, arith.CLASSICAL_15),
                    citation=f"contains {label}, universal by the classical fifteen criterion",
                    notes=notes)
        notes.append("no inherited sublattice passed the classical fifteen criterion")
    else:
        notes.append("lattice is not inherited")
    if arith.nonclassical_290_check(f):
        return UniversalityCertificate(
            L, mode, True, arith.BHARGAVA_290.numbers, 290, _witnesses(L, arith.HERMITIAN_15),
            citation="associated form passes the 290 criterion", notes=notes)
    t = truant(f, 290)
    return UniversalityCertificate(L, mode, False, arith.BHARGAVA_290.numbers, 290, {}, t, notes=notes)


def is_inherited(L: HermitianLattice) -> bool:
    R = size_reduce(L)
    return all(v.b == 0 for row in R.gram for v in row)


# ---------------------------------------------------------------------------
# escalation tree


class NodeStatus(Enum):
    CERTIFIED = "universal-certified"
    ESCALATED = "escalated"
    DUPLICATE = "pruned-duplicate"
    UNEXPANDED = "unexpanded"
    INCONSISTENT = "critical-set-contradiction"


@dataclass
class TreeNode:
    id: int
    lattice: HermitianLattice
    depth: int
    parent: Optional[int]
    status: NodeStatus = NodeStatus.UNEXPANDED
    truant: Optional[int] = None
    children: list[int] = field(default_factory=list)
    duplicate_of: Optional[int] = None
    witness: Optional[list[QuadInt]] = None

    @property
    def rank(self) -> int:
        return self.lattice.hermitian_rank

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "gram": format_gram(self.lattice),
            "rank": self.rank,
            "depth": self.depth,
            "parent": self.parent,
            "status": self.status.value,
            "truant": self.truant,
            "children": self.children,
            "duplicate_of": self.duplicate_of,
            "witness": [str(x) for x in self.witness] if self.witness else None,
        }


class ResourceLimit(RuntimeError):
    def __init__(self, message: str, partial):
        super().__init__(message)
        self.partial = partial


@dataclass
class EscalationTree:
    m: int
    nodes: list[TreeNode]
    max_depth: int
    truant_limit: int
    certify_bound: int

    def truants(self) -> list[int]:
        return [n.truant for n in self.nodes
                if n.truant is not None and n.status is not NodeStatus.DUPLICATE]

    def truant_set(self) -> set[int]:
        return set(self.truants())

    def certified(self) -> list[TreeNode]:
        return [n for n in self.nodes if n.status is NodeStatus.CERTIFIED]

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "max_depth": self.max_depth,
            "truant_limit": self.truant_limit,
            "certify_bound": self.certify_bound,
            "truant_summary": sorted(self.truant_set()),
            "nodes": [n.to_dict() for n in self.nodes],
        }


def _assess(node: TreeNode, crit: arith.CriterionSet, truant_limit: int, certify_bound: int,
            cache: Optional[dict] = None) -> None:
    """Decide a node: certified via the critical set, or give its truant."""
    L = node.lattice
    key = format_gram(L)
    if cache is not None and key in cache:
        rec = cache[key]
        node.status = NodeStatus(rec["status"])
        node.truant = rec["truant"]
        return
    f = associated_zform(L)
    top = max(crit.numbers)
    rep = represented_upto(f, top)
    if all(rep[n] for n in crit):
        node.status = NodeStatus.CERTIFIED
        if certify_bound > top:
            full = represented_upto(f, certify_bound)
            miss = np.flatnonzero(~full[1:])
            if miss.size:
                node.status = NodeStatus.INCONSISTENT
                node.truant = int(miss[0]) + 1
    else:
        node.truant = int(np.flatnonzero(~rep[1:])[0]) + 1
    if cache is not None:
        cache[key] = {"status": node.status.value, "truant": node.truant}


def escalation_tree(m: int, max_depth: int = 3, truant_limit: int = DEFAULT_TRUANT_LIMIT,
                    certify_bound: int = DEFAULT_CERTIFY_BOUND, *, max_rank: Optional[int] = None,
                    prune_universal: bool = True, max_nodes: int = 20000,
                    cache: Optional[dict] = None) -> EscalationTree:
    """Breadth-first escalation from <1> over Q(sqrt(-m))."""
    make_field(m)
    crit = arith.critical_set(m)
    reg = IsometryRegistry("hermitian")
    root = TreeNode(0, diagonal(m, 1), 0, None)
    reg.insert(root.lattice)
    nodes = [root]
    tree = EscalationTree(m, nodes, max_depth, truant_limit, certify_bound)
    frontier = [root]
    reg_to_node = {0: 0}
    while frontier:
        nxt = []
        for node in frontier:
            _assess(node, crit, truant_limit, certify_bound, cache)
            if node.status is NodeStatus.CERTIFIED and prune_universal:
                continue
            if node.truant is None:
                continue
            if node.depth >= max_depth or (max_rank is not None and node.rank >= max_rank):
                node.status = NodeStatus.UNEXPANDED if node.status is not NodeStatus.CERTIFIED else node.status
                if node.status is NodeStatus.UNEXPANDED:
                    continue
            node.status = NodeStatus.ESCALATED if node.status is not NodeStatus.CERTIFIED else node.status
            for cand in escalations(node.lattice, node.truant, check_truant=False, dedup="gram"):
                idx, new = reg.insert(cand.result)
                child = TreeNode(len(nodes), cand.result, node.depth + 1, node.id)
                nodes.append(child)
                node.children.append(child.id)
                if new:
                    reg_to_node[idx] = child.id
                    nxt.append(child)
                else:
                    child.status = NodeStatus.DUPLICATE
                    child.duplicate_of = reg_to_node[idx]
                if len(nodes) > max_nodes:
                    raise ResourceLimit(f"tree exceeded {max_nodes} nodes", tree)
        frontier = nxt
    # nodes left at the depth limit
    for node in nodes:
        if node.status is NodeStatus.UNEXPANDED and node.truant is None:
            _assess(node, crit, truant_limit, certify_bound, cache)
            if node.status is not NodeStatus.CERTIFIED and node.status is not NodeStatus.INCONSISTENT:
                node.status = NodeStatus.UNEXPANDED
    return tree


@dataclass
class MinimalRankRecord:
    m: int
    u_m: Optional[int]
    witness: Optional[HermitianLattice]
    certificate: Optional[UniversalityCertificate]
    max_rank: int
    rank_witnesses: dict[int, list[str]] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "u_m": self.u_m if self.u_m is not None else f"> {self.max_rank}",
            "witness": format_gram(self.witness) if self.witness else None,
            "rank_decisions": {str(k): v for k, v in sorted(self.rank_witnesses.items())},
            "notes": self.notes,
        }


def minimal_universal_rank(m: int, certify_bound: int = DEFAULT_CERTIFY_BOUND, max_rank: int = 4,
                           truant_limit: int = DEFAULT_TRUANT_LIMIT, max_depth: int = 4,
                           cache: Optional[dict] = None) -> MinimalRankRecord:
    """Smallest Hermitian rank carrying a certified universal escalator.

    Escalators are expanded in order of rank; every escalation keeps or raises
    the rank, so the first certified node popped has minimal rank.
    """
    make_field(m)
    crit = arith.critical_set(m)
    reg = IsometryRegistry("hermitian")
    root = diagonal(m, 1)
    reg.insert(root)
    counter = 0
    truncated = False
    cut_ranks: set[int] = set()
    heap = [(root.hermitian_rank, 0, counter, root)]
    decisions: dict[int, list[str]] = {}
    while heap:
        rank, depth, _, L = heapq.heappop(heap)
        if rank > max_rank:
            break
        node = TreeNode(0, L, depth, None)
        _assess(node, crit, truant_limit, 0, cache)
        if node.status is NodeStatus.CERTIFIED:
            cert = certify_universal(L, CertMode.EMPIRICAL, certify_bound)
            if not cert.certified:
                decisions.setdefault(rank, []).append(f"{format_gram(L)}: critical set passed, empirical truant {cert.truant}")
                continue
            crit_cert = certify_universal(L, CertMode.CRITICAL_SET, max(certify_bound, 15))
            decisions.setdefault(rank, []).append(f"{format_gram(L)}: certified")
            notes = [f"certified by the critical set {sorted(crit.numbers)} and empirically up to {certify_bound}"]
            if any(r < rank for r in cut_ranks):
                notes.append(f"lower ranks searched only to depth {max_depth}")
            else:
                notes.append("lower ranks: every escalator of smaller rank has a truant")
            return MinimalRankRecord(m, rank, L, crit_cert, max_rank, decisions, notes)
        decisions.setdefault(rank, []).append(f"{format_gram(L)}: truant {node.truant}")
        if depth >= max_depth:
            truncated = True
            cut_ranks.add(rank)
            continue
        for cand in escalations(L, node.truant, check_truant=False, dedup="gram"):
            R = cand.result
            if R.hermitian_rank > max_rank:
                continue
            idx, new = reg.insert(R)
            if new:
                counter += 1
                heapq.heappush(heap, (R.hermitian_rank, depth + 1, counter, R))
    notes = [f"no certified universal escalator of rank <= {max_rank}"]
    if truncated:
        notes.append(f"search cut at depth {max_depth}; the bound is not exhaustive")
    return MinimalRankRecord(m, None, None, None, max_rank, decisions, notes)


# ---------------------------------------------------------------------------
# escalations of classical Z-lattices


@dataclass
class ZEscalationClasses:
    base: tuple[tuple[int, ...], ...]
    t: int
    members: int
    classes: list[ZQuadForm]
    truants: list[Optional[int]]

    @property
    def universal(self) -> list[ZQuadForm]:
        return [f for f, t in zip(self.classes, self.truants) if t is None]

    @property
    def non_universal(self) -> list[ZQuadForm]:
        return [f for f, t in zip(self.classes, self.truants) if t is not None]


def zform_escalation_classes(base: Sequence[Sequence[int]], t: int,
                             truant_limit: int = 15) -> ZEscalationClasses:
    """Isometry classes of the classical Z-lattices [[B, c], [c^T, t]] with c integral.

    ``base`` is an ordinary (not doubled) integral Gram.  Universality of each
    class is decided by the classical fifteen criterion, i.e. by its truant
    below ``truant_limit``.
    """
    import itertools
    from math import isqrt

    B = [list(r) for r in base]
    d = len(B)
    ranges = [range(-isqrt(B[i][i] * t), isqrt(B[i][i] * t) + 1) for i in range(d)]
    reg: dict[tuple, list[ZQuadForm]] = {}
    classes: list[ZQuadForm] = []
    members = 0
    for c in itertools.product(*ranges):
        M = [B[i] + [c[i]] for i in range(d)] + [list(c) + [t]]
        A = [[2 * x for x in row] for row in M]
        if psd_rank(A) is None:
            continue
        members += 1
        f = ZQuadForm(tuple(map(tuple, A)))
        inv = invariants(f, 20)
        bucket = reg.setdefault(inv, [])
        if any(find_isometry(g, f) is not None for g in bucket):
            continue
        bucket.append(f)
        classes.append(f)
    return ZEscalationClasses(tuple(map(tuple, B)), t, members, classes,
                              [truant(f, truant_limit) for f in classes])
