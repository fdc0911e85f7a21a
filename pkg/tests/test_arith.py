from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from hermlat.arith import (
    GENUS_PAIR_39,
    Parity,
    class_mask,
    class_set,
    classical_15_check,
    critical_set,
    criterion_by_name,
    excluded_set,
    genus_pair_check,
    match_class,
    nonclassical_290_check,
    parse_class,
    subtrahend_for,
    verify_shift_covering,
    verify_subtrahend_table,
)
from hermlat.zform import ZQuadForm

CLASSES = ["2^e u7", "2^d u5", "2^d u7", "5^d u-", "3^d u-", "13^d u+", "2^e", "u3"]


def _naive_match(n, p, parity, unit):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    if parity == "d" and v % 2 == 0 or parity == "e" and v % 2 == 1:
        return False
    if unit is None:
        return True
    if p == 2:
        return n % 8 == unit
    residues = {k * k % p for k in range(1, p)}
    return (n % p in residues) == (unit == "+")


def test_parse_class():
    c = parse_class("2^e u7")
    assert (c.p, c.parity, c.unit) == (2, Parity.EVEN, 7)
    assert parse_class("13^d u+").unit == "+"
    assert parse_class("u5", p=2).parity is Parity.ANY
    for bad in ["", "2^x u7", "u5", "3^d u9"]:
        with pytest.raises(ValueError):
            parse_class(bad)


@pytest.mark.parametrize("text", CLASSES)
def test_mask_matches_definition(text):
    c = parse_class(text, p=2)
    mask = class_mask(c, 3000)
    unit = c.unit
    parity = {Parity.ODD: "d", Parity.EVEN: "e", Parity.ANY: None}[c.parity]
    for n in range(1, 3001):
        assert mask[n] == match_class(n, c) == _naive_match(n, c.p, parity, unit), n
    assert not mask[0]


@given(st.integers(1, 10**9))
def test_match_class_vs_naive(n):
    for text in CLASSES[:6]:
        c = parse_class(text)
        parity = "d" if c.parity is Parity.ODD else "e"
        assert match_class(n, c) == _naive_match(n, c.p, parity, c.unit)


@pytest.mark.parametrize("coeffs,cls", [
    ((1, 1, 1), "2^e u7"),
    ((1, 2, 3), "2^d u5"),
    ((1, 2, 4), "2^d u7"),
    ((1, 2, 5), "5^d u-"),
    ((1, 1, 3), "3^d u-"),
    ((1, 2, 2), "2^e u7"),
])
def test_excluded_sets(coeffs, cls):
    assert excluded_set(ZQuadForm.diagonal(*coeffs), 500) == class_set(parse_class(cls), 500)


def test_shift_covering():
    u7 = parse_class("2^e u7")
    assert verify_shift_covering(u7, {15, 30}, 30, 10**4)
    assert verify_shift_covering(parse_class("5^d u-"), {15, 30, 45}, 45, 10**4)
    res = verify_shift_covering(u7, {7}, 7, 200)
    assert not res and res.counterexamples[0] == 119
    assert verify_shift_covering(u7, {7}, 7, 118)
    with pytest.raises(ValueError):
        verify_shift_covering(u7, {15, 30}, 20, 100)


def test_critical_sets():
    assert set(critical_set(39).numbers) == {1, 2, 3, 5, 6, 7, 13}
    assert set(critical_set(3).numbers) == {1, 2}
    assert set(critical_set(2).numbers) == {1, 5}
    assert set(critical_set(17).numbers) == {1, 2, 3, 5, 6, 7, 10, 14, 15}
    union = set().union(*(critical_set(m).numbers for m in (1, 2, 3, 5, 6, 7, 10, 13, 14, 15, 17, 39, 55)))
    assert union == {1, 2, 3, 5, 6, 7, 10, 13, 14, 15}
    assert criterion_by_name("critical(39)") == critical_set(39)
    with pytest.raises(ValueError):
        critical_set(18)
    with pytest.raises(ValueError):
        criterion_by_name("fifteen")


def test_fifteen_and_290_checks():
    assert classical_15_check(ZQuadForm.diagonal(1, 1, 1, 1))
    assert not classical_15_check(ZQuadForm.diagonal(1, 2, 5, 5))
    with pytest.raises(ValueError):
        classical_15_check(ZQuadForm(((2, 1), (1, 2))))
    assert nonclassical_290_check(ZQuadForm.diagonal(1, 2, 3, 5))
    assert not nonclassical_290_check(ZQuadForm.diagonal(1, 1, 1))


def test_genus_pair():
    fA, fB = GENUS_PAIR_39
    assert fA.det() == fB.det()
    assert genus_pair_check(fA, fB, 0)
    assert genus_pair_check(fA, fB, 1) and genus_pair_check(fA, fB, 4)


def test_subtrahend_table_failures_are_13_squared():
    bad = verify_subtrahend_table(20_000)
    expected = [n for n in range(1405, 20_001, 2) if n % 169 == 0 and subtrahend_for(n) != 0]
    assert bad == expected
    assert 2197 in bad
    with pytest.raises(ValueError):
        subtrahend_for(10)
