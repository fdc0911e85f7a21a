"""Exact arithmetic in the ring of integers of Q(sqrt(-m)).

Elements are stored in the basis {1, w} where w = sqrt(-m) when m = 1, 2 mod 4
and w = (1 + sqrt(-m))/2 when m = 3 mod 4.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from math import isqrt


class OmegaKind(Enum):
    SQRT = "sqrt"
    HALF = "half"


def is_squarefree(m: int) -> bool:
    if m < 1:
        return False
    p = 2
    while p * p <= m:
        if m % (p * p) == 0:
            return False
        p += 1
    return True


@dataclass(frozen=True)
class QuadIntField:
    m: int
    omega_kind: OmegaKind

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be positive, got {self.m}")
        if not is_squarefree(self.m):
            raise ValueError(f"m={self.m} is not square-free")
        expected = OmegaKind.HALF if self.m % 4 == 3 else OmegaKind.SQRT
        if self.omega_kind is not expected:
            raise ValueError(f"m={self.m} requires omega kind {expected.name}")

    @property
    def half(self) -> bool:
        return self.omega_kind is OmegaKind.HALF

    @property
    def c(self) -> int:
        """Constant term of the norm form coefficient of b^2."""
        return (1 + self.m) // 4 if self.half else self.m

    def __call__(self, a: int = 0, b: int = 0) -> QuadInt:
        return QuadInt(self, a, b)

    @property
    def zero(self) -> QuadInt:
        return QuadInt(self, 0, 0)

    @property
    def one(self) -> QuadInt:
        return QuadInt(self, 1, 0)

    @property
    def omega(self) -> QuadInt:
        return QuadInt(self, 0, 1)

    def units(self) -> list[QuadInt]:
        """Units of O, in a fixed order starting with 1, -1."""
        if self.m == 1:
            return [self(1), self(-1), self(0, 1), self(0, -1)]
        if self.m == 3:
            # w = (1+sqrt(-3))/2 is a primitive sixth root of unity
            return [self(1), self(-1), self(0, 1), self(0, -1), self(-1, 1), self(1, -1)]
        return [self(1), self(-1)]

    def norm_form(self, a: int, b: int) -> int:
        if self.half:
            return a * a + a * b + self.c * b * b
        return a * a + self.m * b * b

    def __repr__(self) -> str:
        return f"QuadIntField(m={self.m}, {self.omega_kind.name})"


def make_field(m: int) -> QuadIntField:
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    kind = OmegaKind.HALF if m % 4 == 3 else OmegaKind.SQRT
    return QuadIntField(m, kind)


@dataclass(frozen=True)
class QuadInt:
    field: QuadIntField
    a: int
    b: int

    def _coerce(self, other) -> QuadInt:
        if isinstance(other, QuadInt):
            if other.field != self.field:
                raise ValueError("field mismatch")
            return other
        if isinstance(other, int):
            return QuadInt(self.field, other, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadInt(self.field, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadInt(self.field, -self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadInt(self.field, self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b, c, d = self.a, self.b, o.a, o.b
        bd = b * d
        if self.field.half:
            # w^2 = w - (1+m)/4
            return QuadInt(self.field, a * c - self.field.c * bd, a * d + b * c + bd)
        return QuadInt(self.field, a * c - self.field.m * bd, a * d + b * c)

    __rmul__ = __mul__

    def conj(self) -> QuadInt:
        if self.field.half:
            return QuadInt(self.field, self.a + self.b, -self.b)
        return QuadInt(self.field, self.a, -self.b)

    def norm(self) -> int:
        return self.field.norm_form(self.a, self.b)

    def trace(self) -> int:
        return 2 * self.a + self.b if self.field.half else 2 * self.a

    def is_rational(self) -> bool:
        return self.b == 0

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __str__(self) -> str:
        return format_quadint(self.a, self.b)

    def __repr__(self) -> str:
        return f"QuadInt({self}, m={self.field.m})"


def mul(x: QuadInt, y: QuadInt) -> QuadInt:
    return x * y


def conj(x: QuadInt) -> QuadInt:
    return x.conj()


def norm(x: QuadInt) -> int:
    return x.norm()


def trace(x: QuadInt) -> int:
    return x.trace()


def solve_norm_equation(field: QuadIntField, t: int) -> list[QuadInt]:
    """All elements of norm exactly t, ordered by (b, a)."""
    if t < 0:
        return []
    if t == 0:
        return [field.zero]
    out = []
    # HALF: 4*norm = (2a + b)^2 + m b^2, so b^2 <= 4t/m; SQRT: b^2 <= t/m
    if field.half:
        bmax = isqrt(4 * t // field.m)
    else:
        bmax = isqrt(t // field.m)
    for b in range(-bmax, bmax + 1):
        if field.half:
            # a^2 + a b + c b^2 - t = 0  ->  disc = b^2 - 4(c b^2 - t)
            disc = b * b - 4 * (field.c * b * b - t)
            if disc < 0:
                continue
            r = isqrt(disc)
            if r * r != disc:
                continue
            cands = {(-b - r) // 2 if (-b - r) % 2 == 0 else None,
                     (-b + r) // 2 if (-b + r) % 2 == 0 else None}
        else:
            rem = t - field.m * b * b
            if rem < 0:
                continue
            r = isqrt(rem)
            if r * r != rem:
                continue
            cands = {-r, r}
        for a in sorted(x for x in cands if x is not None):
            if field.norm_form(a, b) == t:
                out.append(QuadInt(field, a, b))
    return out


def elements_up_to_norm(field: QuadIntField, t: int) -> list[QuadInt]:
    """All elements of norm <= t, ordered by (norm, b, a)."""
    out = []
    for k in range(t + 1):
        out.extend(solve_norm_equation(field, k))
    return out


def format_quadint(a: int, b: int) -> str:
    if b == 0:
        return str(a)
    if b == 1:
        bw = "w"
    elif b == -1:
        bw = "-w"
    else:
        bw = f"{b}w"
    if a == 0:
        return bw
    return f"{a}{bw}" if bw.startswith("-") else f"{a}+{bw}"


_TERM = re.compile(r"([+-]?)(\d*)(w?)")


def parse_quadint(text: str, field: QuadIntField) -> QuadInt:
    """Parse `a`, `a+bw`, `-w`, `3-2w`; `cw` is conj(w) and `c(x)` is conj(x)."""
    s = text.replace(" ", "")
    if s == "cw":
        return field.omega.conj()
    if s.startswith("c(") and s.endswith(")"):
        return parse_quadint(s[2:-1], field).conj()
    if not s:
        raise ValueError("empty element")
    a = b = 0
    pos = 0
    while pos < len(s):
        mt = _TERM.match(s, pos)
        sign, digits, w = mt.groups()
        if (not digits and not w) or (pos > 0 and not sign):
            raise ValueError(f"cannot parse element {text!r}")
        coeff = int(digits) if digits else 1
        if sign == "-":
            coeff = -coeff
        if w:
            b += coeff
        else:
            a += coeff
        pos = mt.end()
    return QuadInt(field, a, b)
