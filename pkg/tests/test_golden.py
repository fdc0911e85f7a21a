from __future__ import annotations

import pytest

from hermlat import golden
from hermlat.arith import critical_set
from hermlat.quadring import is_squarefree
from hermlat.tables import _critical, build_report, condition_classes


def test_every_row_is_cited():
    assert golden.missing_citations() == []
    for name, rows in golden.TABLES.items():
        assert rows, name
        assert all(r.cite.strip() for r in rows)


def test_sampled_fields_are_valid():
    for row in golden.TRUANTS:
        assert row.samples and all(is_squarefree(m) for m in row.samples)
    for row in golden.BINARY:
        assert is_squarefree(row.m)


def test_critical_rows_match_lookup():
    for row in golden.CRITICAL:
        for m in row.fields:
            assert set(critical_set(m).numbers) == set(row.numbers), m


def test_conditions_table():
    rep = build_report("conditions")
    assert rep.ok, rep.to_text()


def test_condition_classes_over_six():
    # <1,2> escalated by 5 over Q(sqrt(-6)): a = w with b = 3, 4, 5 and a = -1 + w with b = 4, 5
    assert len(condition_classes(6)) == 5


def test_critical_table_shallow():
    rep = _critical(only={2, 3, 6, 7, 19, 39}, depth=2)
    assert rep.ok, rep.to_text()


def test_unknown_table():
    with pytest.raises(KeyError):
        build_report("nope")
