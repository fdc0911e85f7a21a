"""End-to-end acceptance checks, one test per criterion.

Each test prints a single ``ACCEPTANCE <k> PASS|FAIL`` line (visible even
under output capture) and then asserts.  Run alone with

    pytest tests/test_acceptance.py -v
"""

from __future__ import annotations

import itertools
import random
import time

import numpy as np
import pytest

from hermlat import golden
from hermlat.arith import class_set, excluded_set, parse_class, verify_shift_covering
from hermlat.escalator import escalations, minimal_universal_rank, represents_hermitian, truant_hermitian
from hermlat.hlattice import associated_zform, diagonal, hermitian_norm, parse_gram, split_coordinates
from hermlat.quadring import QuadInt, is_squarefree, make_field, solve_norm_equation
from hermlat.tables import build_report, count_report
from hermlat.zform import ZQuadForm, definite_part, represented_upto, theta_prefix, truant

from oracles import box_theta, hermitian_value, leading_minors_positive, random_definite, random_psd


@pytest.fixture
def report(capsys):
    """Call report(k, ok, detail) once per criterion."""

    def emit(k: int, ok: bool, detail: str, seconds: float) -> None:
        with capsys.disabled():
            print(f"\nACCEPTANCE {k} {'PASS' if ok else 'FAIL'} ({seconds:.1f}s) {detail}")

    return emit


def test_acceptance_1_truant_table(report):
    t0 = time.time()
    rep = build_report("truants")
    spot = {
        (5, "1"): 2, (1, "1"): 3, (2, "1"): 5,
        (17, "1;1;2"): 14, (13, "1;2;3"): 10,
    }
    bad = [k for k, v in spot.items() if truant_hermitian(parse_gram(k[1], k[0], diag=True), 300) != v]
    if truant_hermitian(parse_gram("1,0,0;0,2,w;0,cw,5", 39), 300) != 13:
        bad.append("m=39 exceptional")
    single = {r.label for r in golden.TRUANTS if len(r.samples) < 2}
    sec = time.time() - t0
    ok = rep.ok and not bad and sec < 60
    report(1, ok, f"{len(rep.rows)} rows, {len(rep.diff)} differing, spot misses {bad}, "
                  f"single-field rows {sorted(single)}", sec)
    assert ok, rep.to_text()


def test_acceptance_2_case_conditions(report):
    t0 = time.time()
    ms = [m for m in range(1, 61) if is_squarefree(m)]
    norm2 = {m for m in ms if solve_norm_equation(make_field(m), 2)}
    three = {m for m in ms if represents_hermitian(diagonal(m, 1, 1), 3)[0]}
    seven = {m for m in ms if represents_hermitian(diagonal(m, 1, 1, 1), 7)[0]}
    fourteen = {m for m in ms if represents_hermitian(diagonal(m, 1, 1, 2), 14)[0]}
    need14 = {5, 6, 10, 13, 14, 15, 19, 23, 31, 35, 39, 43, 47, 51, 55}
    checks = {
        "norm 2": norm2 == {1, 2, 7},
        "3 by <1,1>": three == {1, 2, 3, 7, 11},
        "7 by <1,1,1>": seven == {1, 2, 3, 5, 6, 7, 11, 15, 19, 23},
        "14 by <1,1,2>": need14 <= fourteen,
    }
    sec = time.time() - t0
    ok = all(checks.values()) and sec < 60
    report(2, ok, ", ".join(f"{k}: {'ok' if v else 'MISMATCH'}" for k, v in checks.items()), sec)
    assert ok, (norm2, three, seven, sorted(need14 - fourteen))


def test_acceptance_3_class_counts(report):
    t0 = time.time()
    lines, ok = [], True
    for row in golden.COUNTS:
        c = count_report(row)
        good = c["classes"] == row.classes and c["non_universal"] == row.non_universal
        if row.case.startswith("III-4"):
            good = good and c["universal"] == 28
        ok &= good
        lines.append(f"{row.case}: {c['classes']}/{row.classes} classes, "
                     f"{c['non_universal']}/{row.non_universal} non-universal")
    sec = time.time() - t0
    ok = ok and sec < 600
    report(3, ok, "; ".join(lines), sec)
    assert ok, lines


def test_acceptance_4_exceptional_truants(report):
    t0 = time.time()
    problems = []
    four, ell5, ell6 = golden.COUNTS[3], golden.COUNTS[4], golden.COUNTS[5]
    for g in four.exceptional:
        if truant(ZQuadForm.from_gram(g), 100) != 15:
            problems.append(f"III-4 {g}")
    f5 = ZQuadForm.from_gram(ell5.exceptional[0])
    rep5 = represented_upto(f5, 15)
    if truant(f5, 100) != 10 or [n for n in range(1, 16) if not rep5[n]] != [10]:
        problems.append("III-5 l'")
    f6 = ZQuadForm.from_gram(ell6.exceptional[0])
    if truant(f6, 100) != 15 or not represented_upto(f6, 14)[1:].all():
        problems.append("III-6 l'")
    sec = time.time() - t0
    ok = not problems and sec < 60
    report(4, ok, f"problems {problems}", sec)
    assert ok, problems


def test_acceptance_5_exceptional_lattice_39(report):
    t0 = time.time()
    L = parse_gram("1,0,0;0,2,w;0,cw,5", 39)
    rep = represented_upto(associated_zform(L), 1404)
    missed = [n for n in range(1, 1405) if not rep[n]]
    esc = escalations(L, 13)
    weak = []
    for c in esc:
        r = represented_upto(associated_zform(c.result), 2000)
        if not r[1:].all():
            weak.append(c.result)
    sec = time.time() - t0
    ok = missed == [13, 91] and esc and not weak and sec < 600
    report(5, ok, f"missed {missed} up to 1404; {len(esc)} escalations by 13, {len(weak)} miss a value <= 2000", sec)
    assert ok


def test_acceptance_6_binary_table(report):
    t0 = time.time()
    rep = build_report("binary")
    sec = time.time() - t0
    ok = rep.ok and sec < 300
    report(6, ok, f"{len(rep.rows)} lattices, {len(rep.diff)} differing", sec)
    assert ok, rep.to_text()


def test_acceptance_7_shift_covering(report):
    t0 = time.time()
    bound = 10 ** 6
    u7, u5, minus5 = parse_class("2^e u7"), parse_class("2^d u5"), parse_class("5^d u-")
    cases = {
        "2^e u7 by 15,30": verify_shift_covering(u7, {15, 30}, 30, bound),
        "2^e u7 by 23,46": verify_shift_covering(u7, {23, 46}, 46, bound),
        "2^d u5 by 35": verify_shift_covering(u5, {35}, 35, bound),
        "2^d u5 by 43": verify_shift_covering(u5, {43}, 43, bound),
        "5^d u- by 15,30,45": verify_shift_covering(minus5, {15, 30, 45}, 45, bound),
    }
    sec = time.time() - t0
    bad = {k: v.counterexamples for k, v in cases.items() if not v}
    ok = not bad and sec < 60
    report(7, ok, f"{len(cases)} coverings to 10^6, counterexamples {bad}", sec)
    assert ok


def test_acceptance_8_excluded_sets(report):
    t0 = time.time()
    pairs = [((1, 1, 1), "2^e u7"), ((1, 2, 3), "2^d u5"), ((1, 2, 4), "2^d u7"),
             ((1, 2, 5), "5^d u-"), ((1, 1, 3), "3^d u-"), ((1, 2, 2), "2^e u7")]
    bad = [c for c, cls in pairs if excluded_set(ZQuadForm.diagonal(*c), 500) != class_set(parse_class(cls), 500)]
    sec = time.time() - t0
    ok = not bad and sec < 60
    report(8, ok, f"{len(pairs)} ternary forms, mismatches {bad}", sec)
    assert ok


def test_acceptance_9_minimal_ranks(report):
    t0 = time.time()
    got = {}
    for row in golden.RANKS:
        got[row.m] = minimal_universal_rank(row.m, certify_bound=2000, max_depth=4).u_m
    wrong = {r.m: (got[r.m], r.u_m) for r in golden.RANKS if got[r.m] != r.u_m}
    sec = time.time() - t0
    ok = not wrong and sec < 1800
    report(9, ok, f"{len(got)} fields, computed vs expected differs at {wrong}", sec)
    assert ok, wrong


def _all_forms(dim: int, top: int = 6):
    diag = range(2, top + 1, 2)
    off = range(-top, top + 1)
    pairs = [(i, j) for i in range(dim) for j in range(i)]
    for d in itertools.product(diag, repeat=dim):
        for o in itertools.product(off, repeat=len(pairs)):
            A = [[0] * dim for _ in range(dim)]
            for i in range(dim):
                A[i][i] = d[i]
            for (i, j), v in zip(pairs, o):
                A[i][j] = A[j][i] = v
            if leading_minors_positive(A):
                yield A


def test_acceptance_10_property_suites(report):
    t0 = time.time()
    rng = random.Random(2024)
    fails = {"ring": 0, "hermitian": 0, "enumeration": 0, "definite_part": 0}
    fields = [make_field(m) for m in (1, 2, 3, 5, 6, 7, 11, 15, 19, 39, 42)]
    for _ in range(10_000):
        F = rng.choice(fields)
        x = QuadInt(F, rng.randint(-1000, 1000), rng.randint(-1000, 1000))
        y = QuadInt(F, rng.randint(-1000, 1000), rng.randint(-1000, 1000))
        if (x * y).norm() != x.norm() * y.norm() or x.conj().conj() != x:
            fails["ring"] += 1

    box = list(itertools.product(range(-2, 3), repeat=2))
    for k in range(50):
        F = rng.choice(fields)
        dim = 1 + k % 2
        X = [[QuadInt(F, rng.randint(-2, 2), rng.randint(-1, 1)) + (3 if i == j else 0)
              for j in range(dim)] for i in range(dim)]
        rows = [[sum((X[i][t] * X[j][t].conj() for t in range(dim)), F.zero) for j in range(dim)]
                for i in range(dim)]
        L = parse_gram(";".join(",".join(str(v) for v in r) for r in rows), F)
        Q = associated_zform(L)
        for coords in itertools.product(box, repeat=dim):
            v = [QuadInt(F, a, b) for a, b in coords]
            h = hermitian_value(F, L.gram, v)
            if hermitian_norm(L, v) != h or Q(split_coordinates(v)) != h:
                fails["hermitian"] += 1

    # exhaustive in dims 1 and 2, sampled in dims 3 and 4
    forms = list(_all_forms(1)) + list(_all_forms(2))
    forms += [random_definite(rng, 3) for _ in range(150)] + [random_definite(rng, 4) for _ in range(60)]
    for A in forms:
        if list(theta_prefix(ZQuadForm(A), 50)) != box_theta(A, 50):
            fails["enumeration"] += 1

    for _ in range(20):
        rank = rng.randint(1, 3)
        G, D = random_psd(rng, rank + rng.randint(1, 2), rank)
        if list(theta_prefix(definite_part(ZQuadForm(G)), 30)) != box_theta(D, 30):
            fails["definite_part"] += 1
    sec = time.time() - t0
    ok = not any(fails.values()) and sec < 300
    report(10, ok, f"{len(forms)} forms vs box oracle; failures {fails}", sec)
    assert ok, fails
