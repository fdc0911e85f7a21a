from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from hermlat.quadring import (
    QuadInt,
    elements_up_to_norm,
    format_quadint,
    is_squarefree,
    make_field,
    parse_quadint,
    solve_norm_equation,
)

FIELDS = [1, 2, 3, 5, 6, 7, 11, 15, 17, 19, 39, 42, 55]


def _brute_norm(F, t):
    # independent oracle: expand the product x * conj(x) symbolically and scan a generous box
    r = int((4 * t) ** 0.5) + 2
    out = set()
    for a in range(-r, r + 1):
        for b in range(-r, r + 1):
            x = QuadInt(F, a, b)
            p = x * x.conj()
            assert p.b == 0
            if p.a == t:
                out.add((a, b))
    return out


@pytest.mark.parametrize("m", FIELDS)
def test_norm_equation_matches_box(m):
    F = make_field(m)
    for t in range(0, 31):
        got = {(x.a, x.b) for x in solve_norm_equation(F, t)}
        assert got == _brute_norm(F, t), t


def test_norm_two_exists_only_for_small_fields():
    hits = {m for m in range(1, 61) if is_squarefree(m) and solve_norm_equation(make_field(m), 2)}
    assert hits == {1, 2, 7}


def test_units():
    assert len(make_field(1).units()) == 4
    assert len(make_field(3).units()) == 6
    assert len(make_field(2).units()) == 2
    for m in FIELDS:
        assert all(u.norm() == 1 for u in make_field(m).units())


def test_omega_minimal_polynomial():
    w = make_field(7).omega
    assert w * w == w - 2
    s = make_field(6).omega
    assert s * s == QuadInt(make_field(6), -6, 0)


def test_rejects_non_squarefree_and_mixed_fields():
    with pytest.raises(ValueError):
        make_field(12)
    with pytest.raises(ValueError):
        make_field(0)
    with pytest.raises(ValueError):
        make_field(5).one + make_field(6).one


def test_elements_up_to_norm_sorted_and_complete():
    F = make_field(5)
    els = elements_up_to_norm(F, 20)
    norms = [x.norm() for x in els]
    assert norms == sorted(norms)
    assert len(els) == sum(len(_brute_norm(F, t)) for t in range(21))


def test_norm_mult_and_involution_bulk():
    rng = random.Random(7)
    for _ in range(10_000):
        F = make_field(rng.choice(FIELDS))
        x = QuadInt(F, rng.randint(-50, 50), rng.randint(-50, 50))
        y = QuadInt(F, rng.randint(-50, 50), rng.randint(-50, 50))
        assert (x * y).norm() == x.norm() * y.norm()
        assert x.conj().conj() == x
        assert (x * y).conj() == x.conj() * y.conj()


elem = st.tuples(st.sampled_from(FIELDS), st.integers(-10**6, 10**6), st.integers(-10**6, 10**6),
                 st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))


@given(elem)
def test_ring_laws(e):
    m, a, b, c, d = e
    F = make_field(m)
    x, y = QuadInt(F, a, b), QuadInt(F, c, d)
    assert x.norm() >= 0
    assert (x + y).conj() == x.conj() + y.conj()
    assert x.trace() == (x + x.conj()).a
    assert x * (y + 1) == x * y + x


@given(st.sampled_from(FIELDS), st.integers(-99, 99), st.integers(-99, 99))
def test_format_parse_roundtrip(m, a, b):
    F = make_field(m)
    assert parse_quadint(format_quadint(a, b), F) == QuadInt(F, a, b)


def test_parse_conjugates():
    F = make_field(39)
    assert parse_quadint("cw", F) == F.omega.conj() == QuadInt(F, 1, -1)
    assert parse_quadint("c(2-3w)", F) == QuadInt(F, 2, -3).conj()
    for bad in ["", "w2", "1++w", "x"]:
        with pytest.raises(ValueError):
            parse_quadint(bad, F)
