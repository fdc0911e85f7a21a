"""Slow, obviously-correct reference implementations used only by the tests."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from math import isqrt

import numpy as np


def _inverse(A):
    n = len(A)
    M = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(A)]
    for c in range(n):
        p = next(r for r in range(c, n) if M[r][c] != 0)
        M[c], M[p] = M[p], M[c]
        piv = M[c][c]
        M[c] = [v / piv for v in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return [row[n:] for row in M]


def leading_minors_positive(A) -> bool:
    n = len(A)
    for k in range(1, n + 1):
        sub = [[Fraction(v) for v in row[:k]] for row in A[:k]]
        # plain elimination determinant
        d = Fraction(1)
        for c in range(k):
            p = next((r for r in range(c, k) if sub[r][c] != 0), None)
            if p is None:
                return False
            if p != c:
                sub[c], sub[p] = sub[p], sub[c]
                d = -d
            d *= sub[c][c]
            for r in range(c + 1, k):
                f = sub[r][c] / sub[c][c]
                sub[r] = [a - f * b for a, b in zip(sub[r], sub[c])]
        if d <= 0:
            return False
    return True


def q_value(A, x) -> int:
    """Q(x) = x^T A x / 2 for a doubled Gram A."""
    n = len(A)
    return sum(x[i] * A[i][j] * x[j] for i in range(n) for j in range(n)) // 2


def box_theta(A, N: int) -> list[int]:
    """Representation counts for k <= N by scanning the bounding box of the ellipsoid."""
    n = len(A)
    inv = _inverse(A)
    # x_i^2 <= 2N * (A^-1)_ii
    r = [isqrt(int(2 * N * inv[i][i])) + 1 for i in range(n)]
    grids = np.meshgrid(*[np.arange(-ri, ri + 1) for ri in r], indexing="ij")
    X = np.stack([g.ravel() for g in grids], axis=1).astype(np.int64)
    q = np.einsum("ki,ij,kj->k", X, np.array(A, dtype=np.int64), X) // 2
    return np.bincount(q[q <= N], minlength=N + 1).tolist()


def random_definite(rng: random.Random, dim: int, top: int = 6):
    """Doubled Gram with |entries| <= top (even diagonal), positive definite."""
    while True:
        A = [[0] * dim for _ in range(dim)]
        for i in range(dim):
            A[i][i] = 2 * rng.randint(1, top // 2)
            for j in range(i):
                A[i][j] = A[j][i] = rng.randint(-top, top)
        if leading_minors_positive(A):
            return A


def random_unimodular(rng: random.Random, dim: int, steps: int = 12):
    U = [[int(i == j) for j in range(dim)] for i in range(dim)]
    for _ in range(steps):
        a, b = rng.sample(range(dim), 2)
        k = rng.choice([-2, -1, 1, 2])
        for row in U:
            row[b] += k * row[a]
    return U


def congruent(A, U):
    n = len(A)
    return [[sum(U[k][i] * A[k][l] * U[l][j] for k in range(n) for l in range(n))
             for j in range(n)] for i in range(n)]


def random_psd(rng: random.Random, dim: int, rank: int, top: int = 6):
    """(G, D): a rank-``rank`` doubled Gram G whose quotient by the radical is D.

    G = V^T (B^T D B) V with B = [I | C], so B maps Z^dim onto Z^rank and the
    quotient lattice is exactly (Z^rank, D).
    """
    D = random_definite(rng, rank, top)
    B = [[int(i == j) if j < rank else rng.randint(-2, 2) for j in range(dim)] for i in range(rank)]
    G = [[sum(B[a][i] * D[a][b] * B[b][j] for a in range(rank) for b in range(rank))
          for j in range(dim)] for i in range(dim)]
    return congruent(G, random_unimodular(rng, dim)), D


def hermitian_value(F, gram, x) -> int:
    """H(x) = sum_ij x_i g_ij conj(x_j), computed directly in the ring."""
    total = F.zero
    n = len(gram)
    for i in range(n):
        for j in range(n):
            total = total + x[i] * gram[i][j] * x[j].conj()
    assert total.b == 0
    return total.a


def naive_represented(values, N: int) -> set[int]:
    return {v for v in values if 0 < v <= N}
