"""Integral quadratic forms over Z given by doubled Gram matrices.

A form is stored as a symmetric integer matrix ``A`` with even diagonal and
``Q(x) = x^T A x / 2``.  Everything here is exact: positive semidefiniteness
is decided by rational elimination, the radical is removed by unimodular
column operations, and enumeration bounds come from integer Schur
complements with ``isqrt``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterator, Optional, Sequence

import numpy as np

Matrix = tuple[tuple[int, ...], ...]


def _as_matrix(rows) -> Matrix:
    return tuple(tuple(int(v) for v in row) for row in rows)


def psd_rank(A: Sequence[Sequence[int]]) -> Optional[int]:
    """Rank of A if A is positive semidefinite, else None."""
    n = len(A)
    M = [[Fraction(v) for v in row] for row in A]
    alive = list(range(n))
    rank = 0
    while alive:
        for i in alive:
            if M[i][i] < 0:
                return None
        piv = max(alive, key=lambda i: M[i][i])
        if M[piv][piv] == 0:
            # a zero diagonal forces a zero row in a PSD matrix
            if any(M[i][j] != 0 for i in alive for j in alive):
                return None
            break
        p = M[piv][piv]
        alive.remove(piv)
        for i in alive:
            if M[i][piv] == 0:
                continue
            f = M[i][piv] / p
            for j in alive:
                M[i][j] -= f * M[piv][j]
        rank += 1
    return rank


def det(A: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(row) for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


@dataclass(frozen=True)
class ZQuadForm:
    """Quadratic form with doubled Gram matrix ``gram``."""

    gram: Matrix
    rank: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        g = _as_matrix(self.gram)
        object.__setattr__(self, "gram", g)
        d = len(g)
        for i in range(d):
            if len(g[i]) != d:
                raise ValueError("Gram matrix must be square")
            if g[i][i] % 2:
                raise ValueError("doubled Gram must have even diagonal")
            for j in range(i):
                if g[i][j] != g[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
        r = psd_rank(g)
        if r is None:
            raise ValueError("form is not positive semidefinite")
        object.__setattr__(self, "rank", r)

    @property
    def dim(self) -> int:
        return len(self.gram)

    @property
    def classical(self) -> bool:
        return all(v % 2 == 0 for row in self.gram for v in row)

    @property
    def definite(self) -> bool:
        return self.rank == self.dim

    def det(self) -> int:
        return det(self.gram)

    def __call__(self, x: Sequence[int]) -> int:
        A = self.gram
        d = len(A)
        s = 0
        for i in range(d):
            if x[i]:
                s += x[i] * (A[i][i] * x[i] + 2 * sum(A[i][j] * x[j] for j in range(i + 1, d)))
        return s // 2

    @classmethod
    def from_gram(cls, G) -> ZQuadForm:
        """Build from a classical Gram matrix (B(e_i, e_j) entries)."""
        return cls(tuple(tuple(2 * v for v in row) for row in G))

    @classmethod
    def diagonal(cls, *coeffs: int) -> ZQuadForm:
        n = len(coeffs)
        return cls(tuple(tuple(2 * coeffs[i] if i == j else 0 for j in range(n)) for i in range(n)))

    def __str__(self) -> str:
        return format_zform(self)


def orthogonal_sum(*forms: ZQuadForm) -> ZQuadForm:
    n = sum(f.dim for f in forms)
    rows = [[0] * n for _ in range(n)]
    off = 0
    for f in forms:
        for i in range(f.dim):
            for j in range(f.dim):
                rows[off + i][off + j] = f.gram[i][j]
        off += f.dim
    return ZQuadForm(_as_matrix(rows))


# ---------------------------------------------------------------------------
# radical removal and reduction


def _radical_basis(A: Matrix) -> tuple[list[list[int]], int]:
    """Unimodular U (columns) with A*U having its last d-r columns zero."""
    d = len(A)
    M = [list(row) for row in A]
    U = [[int(i == j) for j in range(d)] for i in range(d)]

    def colop(dst, src, q):
        # column dst -= q * column src
        for row in M:
            row[dst] -= q * row[src]
        for row in U:
            row[dst] -= q * row[src]

    def swap(c1, c2):
        for row in M:
            row[c1], row[c2] = row[c2], row[c1]
        for row in U:
            row[c1], row[c2] = row[c2], row[c1]

    piv = 0
    for i in range(d):
        if piv >= d:
            break
        while True:
            nz = [c for c in range(piv, d) if M[i][c] != 0]
            if not nz:
                break
            c0 = min(nz, key=lambda c: abs(M[i][c]))
            if c0 != piv:
                swap(c0, piv)
            done = True
            for c in range(piv + 1, d):
                if M[i][c]:
                    colop(c, piv, M[i][c] // M[i][piv])
                    if M[i][c]:
                        done = False
            if done:
                piv += 1
                break
    return U, piv


def _transform(A: Matrix, B: list[list[int]]) -> Matrix:
    """B^T A B for B given as a list of rows (d x r)."""
    d = len(A)
    r = len(B[0]) if B else 0
    AB = [[sum(A[i][k] * B[k][j] for k in range(d)) for j in range(r)] for i in range(d)]
    return tuple(tuple(sum(B[k][i] * AB[k][j] for k in range(d)) for j in range(r)) for i in range(r))


def lll_gram(A: Matrix, delta: Fraction = Fraction(99, 100)) -> tuple[Matrix, list[list[int]]]:
    """LLL-reduce a positive definite Gram matrix; returns (U^T A U, U).

    All-integer variant: Gram-Schmidt data is kept as the integers
    d_i (leading minors) and lam[k][j] = d_j mu_kj, so no fractions appear.
    """
    n = len(A)
    G = [list(row) for row in A]
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    if n <= 1:
        return _as_matrix(G), U
    p, q = delta.numerator, delta.denominator
    # dd[i + 1] = d_i, dd[0] = 1
    dd = [1] * (n + 1)
    lam = [[0] * n for _ in range(n)]

    def gso_row(k):
        for j in range(k + 1):
            u = G[k][j]
            for i in range(j):
                u = (dd[i + 1] * u - lam[k][i] * lam[j][i]) // dd[i]
            if j < k:
                lam[k][j] = u
            else:
                if u <= 0:
                    raise ValueError("Gram matrix is not positive definite")
                dd[k + 1] = u

    def reduce(k, j, c):
        # b_k -= c b_j
        for i in range(n):
            U[i][k] -= c * U[i][j]
        gkj = G[k][j]
        gjj = G[j][j]
        for i in range(n):
            if i != k:
                G[k][i] -= c * G[j][i]
                G[i][k] = G[k][i]
        G[k][k] += -2 * c * gkj + c * c * gjj

    def redi(k, l):
        dl = dd[l + 1]
        if 2 * abs(lam[k][l]) > dl:
            c = (2 * lam[k][l] + dl) // (2 * dl)
            reduce(k, l, c)
            lam[k][l] -= c * dl
            for i in range(l):
                lam[k][i] -= c * lam[l][i]

    def swapi(k, kmax):
        for row in U:
            row[k], row[k - 1] = row[k - 1], row[k]
        G[k], G[k - 1] = G[k - 1], G[k]
        for row in G:
            row[k], row[k - 1] = row[k - 1], row[k]
        for j in range(k - 1):
            lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
        lk = lam[k][k - 1]
        B = (dd[k - 1] * dd[k + 1] + lk * lk) // dd[k]
        for i in range(k + 1, kmax + 1):
            t = lam[i][k]
            lam[i][k] = (dd[k + 1] * lam[i][k - 1] - lk * t) // dd[k]
            lam[i][k - 1] = (B * t + lk * lam[i][k]) // dd[k + 1]
        dd[k] = B

    gso_row(0)
    k, kmax = 1, 0
    while k < n:
        if k > kmax:
            kmax = k
            gso_row(k)
        redi(k, k - 1)
        lk = lam[k][k - 1]
        if q * (dd[k + 1] * dd[k - 1] + lk * lk) < p * dd[k] * dd[k]:
            swapi(k, kmax)
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                redi(k, l)
            k += 1
    return _as_matrix(G), U

    def gso():
        mu = [[Fraction(0)] * n for _ in range(n)]
        bstar = [Fraction(0)] * n
        for i in range(n):
            for j in range(i):
                s = Fraction(G[i][j])
                for k in range(j):
                    s -= mu[j][k] * mu[i][k] * bstar[k]
                mu[i][j] = s / bstar[j]
            s = Fraction(G[i][i])
            for k in range(i):
                s -= mu[i][k] * mu[i][k] * bstar[k]
            bstar[i] = s
        return mu, bstar

    def reduce(k, j, q):
        # b_k -= q b_j
        for i in range(n):
            U[i][k] -= q * U[i][j]
        gkj = G[k][j]
        gjj = G[j][j]
        for i in range(n):
            if i != k:
                G[k][i] -= q * G[j][i]
                G[i][k] = G[k][i]
        G[k][k] += -2 * q * gkj + q * q * gjj

    def swap(k):
        for row in U:
            row[k], row[k - 1] = row[k - 1], row[k]
        G[k], G[k - 1] = G[k - 1], G[k]
        for row in G:
            row[k], row[k - 1] = row[k - 1], row[k]

    mu, bstar = gso()
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                reduce(k, j, q)
                mu, bstar = gso()
        if bstar[k] >= (delta - mu[k][k - 1] ** 2) * bstar[k - 1]:
            k += 1
        else:
            swap(k)
            mu, bstar = gso()
            k = max(k - 1, 1)
    return _as_matrix(G), U


class _Prepared:
    """Definite, reduced model of a PSD form plus the map back to its coordinates."""

    def __init__(self, A: Matrix):
        d = len(A)
        U, r = _radical_basis(A)
        B = [row[:r] for row in U]
        D = _transform(A, B) if r else ()
        if r:
            D, V = lll_gram(D)
            B = [[sum(B[i][k] * V[k][j] for k in range(r)) for j in range(r)] for i in range(d)]
        self.source_dim = d
        self.gram: Matrix = D
        self.basis = B
        # rows r.. of the unimodular completion are the radical; the first r
        # rows of its inverse send source coordinates to reduced ones
        full = [B[i] + U[i][r:] for i in range(d)]
        inv = _inverse([[Fraction(v) for v in row] for row in full]) if d else []
        self.proj = [[int(v) for v in inv[i]] for i in range(r)]
        self.dim = r
        self._setup()

    def _setup(self):
        A = self.gram
        d = self.dim
        # E[k+1] = det of trailing block A[k+1:, k+1:]; E[d] = 1
        E = [det([row[k:] for row in A[k:]]) for k in range(d)] + [1]
        self.E = E
        self.E_after = [E[k + 1] for k in range(d)]
        rows = []
        for k in range(d):
            # T_k = E_after[k] * Schur complement of A[k+1:] on indices 0..k
            rest = list(range(k + 1, d))
            if rest:
                R = [[Fraction(A[i][j]) for j in rest] for i in rest]
                inv = _inverse(R)
                e = self.E_after[k]
                row = []
                for j in range(k + 1):
                    s = Fraction(A[k][j])
                    for a, ia in enumerate(rest):
                        if A[k][ia] == 0:
                            continue
                        for b, ib in enumerate(rest):
                            s -= A[k][ia] * inv[a][b] * A[ib][j]
                    v = s * e
                    assert v.denominator == 1
                    row.append(int(v))
            else:
                row = list(A[k][: k + 1])
            rows.append(row)
        self.T = rows
        self.alpha = [rows[k][k] for k in range(d)]

    def reduce(self, z: Sequence[int]) -> tuple[int, ...]:
        """Reduced coordinates of a source vector (its class modulo the radical)."""
        return tuple(sum(self.proj[i][j] * z[j] for j in range(self.source_dim)) for i in range(self.dim))

    def lift(self, y: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(self.basis[i][j] * y[j] for j in range(self.dim)) for i in range(self.source_dim))

    # -- enumeration ---------------------------------------------------------

    def _range(self, k, beta, gamma, bound2):
        alpha = self.alpha[k]
        B = bound2 * self.E_after[k]
        disc = beta * beta - alpha * (gamma - B)
        if disc < 0:
            return None
        r = isqrt(disc)
        return -((r + beta) // alpha), (r - beta) // alpha

    def find(self, n: int) -> Optional[tuple[int, ...]]:
        """First vector (ascending search order) with Q = n, in reduced coordinates."""
        if n == 0:
            return (0,) * self.dim
        if self.dim == 0:
            return None
        target = 2 * n
        d = self.dim
        T, E, alpha = self.T, self.E, self.alpha
        x = [0] * d

        def rec(k, gamma):
            row = T[k]
            beta = 0
            for j in range(k):
                if x[j]:
                    beta += row[j] * x[j]
            a = alpha[k]
            if k == d - 1:
                disc = beta * beta - a * (gamma - target)
                if disc < 0:
                    return False
                r = isqrt(disc)
                if r * r != disc:
                    return False
                for num in (-beta - r, -beta + r):
                    if num % a == 0:
                        x[k] = num // a
                        return True
                return False
            rng = self._range(k, beta, gamma, target)
            if rng is None:
                return False
            lo, hi = rng
            e_next, e_here = E[k + 2], E[k + 1]
            for v in range(lo, hi + 1):
                w = a * v * v + 2 * beta * v + gamma
                x[k] = v
                # next-level prefix term
                nrow = T[k + 1]
                b2 = 0
                for j in range(k + 1):
                    if x[j]:
                        b2 += nrow[j] * x[j]
                g2 = (w * e_next + b2 * b2) // e_here
                if rec(k + 1, g2):
                    return True
            x[k] = 0
            return False

        if rec(0, 0):
            return tuple(x)
        return None

    def counts(self, N: int, mark_only: bool = False) -> np.ndarray:
        """Vector counts r(0..N) over all vectors with Q <= N.

        With ``mark_only`` a boolean array of represented values is returned.
        """
        out = np.zeros(N + 1, dtype=bool if mark_only else np.int64)
        if self.dim == 0:
            out[0] = 1
            return out
        bound2 = 2 * N
        d = self.dim
        T, E, alpha = self.T, self.E, self.alpha
        x = [0] * d

        def rec(k, gamma):
            row = T[k]
            beta = 0
            for j in range(k):
                if x[j]:
                    beta += row[j] * x[j]
            rng = self._range(k, beta, gamma, bound2)
            if rng is None:
                return
            lo, hi = rng
            if lo > hi:
                return
            a = alpha[k]
            if k == d - 1:
                v = np.arange(lo, hi + 1, dtype=np.int64)
                vals = (a * v * v + 2 * beta * v + gamma) // 2
                if mark_only:
                    out[vals] = True
                else:
                    np.add.at(out, vals, 1)
                return
            e_next, e_here = E[k + 2], E[k + 1]
            nrow = T[k + 1]
            for v in range(lo, hi + 1):
                w = a * v * v + 2 * beta * v + gamma
                x[k] = v
                b2 = 0
                for j in range(k + 1):
                    if x[j]:
                        b2 += nrow[j] * x[j]
                rec(k + 1, (w * e_next + b2 * b2) // e_here)
            x[k] = 0

        if 2 * N * max(self.E) > 2 ** 62:
            raise OverflowError("enumeration bound too large for exact int64 leaves")
        rec(0, 0)
        return out

    def vectors(self, N: int) -> Iterator[tuple[tuple[int, ...], int]]:
        """All (y, Q(y)) with Q(y) <= N, in reduced coordinates."""
        if self.dim == 0:
            yield (), 0
            return
        bound2 = 2 * N
        d = self.dim
        T, E, alpha = self.T, self.E, self.alpha
        x = [0] * d

        def rec(k, gamma):
            row = T[k]
            beta = sum(row[j] * x[j] for j in range(k))
            rng = self._range(k, beta, gamma, bound2)
            if rng is None:
                return
            lo, hi = rng
            a = alpha[k]
            for v in range(lo, hi + 1):
                w = a * v * v + 2 * beta * v + gamma
                x[k] = v
                if k == d - 1:
                    yield tuple(x), w // 2
                else:
                    nrow = T[k + 1]
                    b2 = sum(nrow[j] * x[j] for j in range(k + 1))
                    yield from rec(k + 1, (w * E[k + 2] + b2 * b2) // E[k + 1])
            x[k] = 0

        yield from rec(0, 0)

    def vector_array(self, N: int) -> tuple[np.ndarray, np.ndarray]:
        """All vectors with Q <= N as an (n, dim) int64 array, with their values."""
        d = self.dim
        if d == 0:
            return np.zeros((1, 0), dtype=np.int64), np.zeros(1, dtype=np.int64)
        bound2 = 2 * N
        T, E, alpha = self.T, self.E, self.alpha
        x = [0] * d
        blocks: list[np.ndarray] = []
        values: list[np.ndarray] = []

        def rec(k, gamma):
            row = T[k]
            beta = sum(row[j] * x[j] for j in range(k))
            rng = self._range(k, beta, gamma, bound2)
            if rng is None or rng[0] > rng[1]:
                return
            lo, hi = rng
            a = alpha[k]
            if k == d - 1:
                v = np.arange(lo, hi + 1, dtype=np.int64)
                blk = np.empty((v.size, d), dtype=np.int64)
                blk[:, :k] = x[:k]
                blk[:, k] = v
                blocks.append(blk)
                values.append((a * v * v + 2 * beta * v + gamma) // 2)
                return
            nrow = T[k + 1]
            for v in range(lo, hi + 1):
                w = a * v * v + 2 * beta * v + gamma
                x[k] = v
                b2 = sum(nrow[j] * x[j] for j in range(k + 1))
                rec(k + 1, (w * E[k + 2] + b2 * b2) // E[k + 1])
            x[k] = 0

        if 2 * N * max(self.E) > 2 ** 62:
            raise OverflowError("enumeration bound too large for exact int64 leaves")
        rec(0, 0)
        return np.concatenate(blocks), np.concatenate(values)

    def estimate(self, N: int) -> float:
        """Approximate number of vectors with Q <= N (ellipsoid volume)."""
        from math import gamma, pi, sqrt

        d = self.dim
        if d == 0:
            return 1.0
        return pi ** (d / 2) / gamma(d / 2 + 1) * (2 * N) ** (d / 2) / sqrt(self.E[0])


def _inverse(R):
    n = len(R)
    M = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(R)]
    for c in range(n):
        p = next(i for i in range(c, n) if M[i][c] != 0)
        M[c], M[p] = M[p], M[c]
        pv = M[c][c]
        M[c] = [v / pv for v in M[c]]
        for i in range(n):
            if i != c and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return [row[n:] for row in M]


@lru_cache(maxsize=4096)
def _prepare(gram: Matrix) -> _Prepared:
    return _Prepared(gram)


def prepared(f: ZQuadForm) -> _Prepared:
    return _prepare(f.gram)


# ---------------------------------------------------------------------------
# public operations


def definite_part(f: ZQuadForm) -> ZQuadForm:
    """Positive definite form on the quotient by the radical (LLL-reduced)."""
    if f.definite:
        return f
    return ZQuadForm(prepared(f).gram)


def represents(f: ZQuadForm, k: int) -> tuple[bool, Optional[tuple[int, ...]]]:
    if k < 0:
        return False, None
    P = prepared(f)
    y = P.find(k)
    if y is None:
        return False, None
    return True, P.lift(y)


def theta_prefix(f: ZQuadForm, N: int) -> tuple[int, ...]:
    return tuple(int(v) for v in prepared(f).counts(N))


# budget of lattice points for one full enumeration pass
_ENUM_BUDGET = 400_000


def represented_upto(f: ZQuadForm, N: int, budget: int = _ENUM_BUDGET) -> np.ndarray:
    """Boolean array ``rep`` with rep[k] True iff Q represents k, for k <= N.

    One full enumeration covers the largest leading sublattice that fits the
    point budget; remaining gaps are settled by exact per-value searches.
    """
    P = prepared(f)
    rep = np.zeros(N + 1, dtype=bool)
    rep[0] = True
    if P.dim == 0:
        return rep
    if P.estimate(N) <= budget:
        return P.counts(N, mark_only=True)
    # leading sublattices of the reduced basis
    for k in range(P.dim - 1, 0, -1):
        sub = _prepare(tuple(row[:k] for row in P.gram[:k]))
        if sub.estimate(N) <= budget:
            rep |= sub.counts(N, mark_only=True)
            break
    for n in np.flatnonzero(~rep):
        if P.find(int(n)) is not None:
            rep[n] = True
    return rep


def truant(f: ZQuadForm, limit: int) -> Optional[int]:
    """Smallest k in 1..limit not represented by f, or None."""
    P = prepared(f)
    if limit <= 60 or P.estimate(limit) <= _ENUM_BUDGET:
        rep = represented_upto(f, limit)
        missing = np.flatnonzero(~rep[1:])
        return int(missing[0]) + 1 if missing.size else None
    for k in range(1, limit + 1):
        if P.find(k) is None:
            return k
    return None


def excluded_values(f: ZQuadForm, bound: int) -> list[int]:
    rep = represented_upto(f, bound)
    return [int(k) for k in np.flatnonzero(~rep) if k >= 1]


def is_isometric(f: ZQuadForm, g: ZQuadForm) -> bool:
    """Exact test for an integral U with U^T A_f U = A_g (on definite parts)."""
    return find_isometry(f, g) is not None


def find_isometry(f: ZQuadForm, g: ZQuadForm) -> Optional[list[list[int]]]:
    Pf, Pg = prepared(f), prepared(g)
    if Pf.dim != Pg.dim:
        if f.dim != g.dim:
            raise ValueError("dimension mismatch")
        return None
    d = Pf.dim
    if d == 0:
        return []
    if Pf.E[0] != Pg.E[0]:
        return None
    G = Pg.gram
    top = max(G[i][i] for i in range(d)) // 2
    if not np.array_equal(Pf.counts(top), Pg.counts(top)):
        return None
    A = Pf.gram
    by_norm: dict[int, list[tuple[int, ...]]] = {}
    for y, q in Pf.vectors(top):
        by_norm.setdefault(q, []).append(y)

    def ip(u, v):
        return sum(u[i] * A[i][j] * v[j] for i in range(d) for j in range(d) if u[i] and v[j])

    cand = [by_norm.get(G[i][i] // 2, []) for i in range(d)]
    chosen: list[tuple[int, ...]] = []

    def rec(i):
        if i == d:
            return True
        for v in cand[i]:
            if i == 0 and next(c for c in v if c) < 0:
                continue  # sign of the first image is free
            if all(ip(chosen[j], v) == G[j][i] for j in range(i)):
                chosen.append(v)
                if rec(i + 1):
                    return True
                chosen.pop()
        return False

    if not rec(0):
        return None
    # columns are images of g's reduced basis in f's reduced coordinates
    return [[chosen[j][i] for j in range(d)] for i in range(d)]


def invariants(f: ZQuadForm, N: int = 20) -> tuple:
    """Cheap isometry fingerprint: (rank, determinant of definite part, theta prefix)."""
    P = prepared(f)
    return (P.dim, P.E[0] if P.dim else 1, tuple(int(v) for v in P.counts(N)))


# ---------------------------------------------------------------------------
# text format


def format_zform(f: ZQuadForm) -> str:
    rows = ";".join(",".join(str(v) for v in row) for row in f.gram)
    return f"d={f.dim}; {rows}"


def parse_zform(text: str) -> ZQuadForm:
    """Parse ``d=<int>; r,r,...; ...`` (doubled Gram)."""
    parts = [p.strip() for p in text.strip().split(";") if p.strip()]
    if not parts or not parts[0].startswith("d="):
        raise ValueError("expected header d=<int>")
    d = int(parts[0][2:])
    rows = [[int(v) for v in p.split(",")] for p in parts[1:]]
    if len(rows) != d or any(len(r) != d for r in rows):
        raise ValueError(f"expected {d} rows of {d} entries")
    return ZQuadForm(_as_matrix(rows))


def theta_csv(theta: Sequence[int]) -> str:
    return "k,count\n" + "".join(f"{k},{c}\n" for k, c in enumerate(theta))
