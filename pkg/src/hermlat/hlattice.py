"""Hermitian lattices over O given by Hermitian Gram matrices.

A lattice O v_1 + ... + O v_{n-1} + (alpha, beta) O v_n that is not free is
stored through the (n+1) x (n+1) Gram of the generators
v_1, ..., v_{n-1}, alpha v_n, beta v_n.  That matrix is only positive
semidefinite, so ``hermitian_rank`` (half the rank of the associated Z-form)
can be smaller than the matrix dimension.

Convention: H is linear in the first argument, H(a x, b y) = a conj(b) H(x, y),
and gram[i][j] = H(v_i, v_j).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Sequence

from .quadring import QuadInt, QuadIntField, make_field, parse_quadint
from .zform import ZQuadForm

QMatrix = tuple[tuple[QuadInt, ...], ...]


@dataclass(frozen=True)
class HermitianLattice:
    field: QuadIntField
    gram: QMatrix
    hermitian_rank: int = field(init=False, compare=False)

    def __post_init__(self):
        F = self.field
        g = tuple(tuple(F(v) if isinstance(v, int) else v for v in row) for row in self.gram)
        object.__setattr__(self, "gram", g)
        d = len(g)
        for i in range(d):
            if len(g[i]) != d:
                raise ValueError("Gram matrix must be square")
            for j in range(d):
                if g[i][j].field != F:
                    raise ValueError("field mismatch in Gram entry")
            if g[i][i].b != 0 or g[i][i].a < 0:
                raise ValueError("diagonal entries must be nonnegative rational integers")
            for j in range(i):
                if g[i][j] != g[j][i].conj():
                    raise ValueError("Gram matrix is not Hermitian")
        z = _assoc(self)
        object.__setattr__(self, "_zform", z)
        object.__setattr__(self, "hermitian_rank", z.rank // 2)

    @property
    def dim(self) -> int:
        return len(self.gram)

    @property
    def m(self) -> int:
        return self.field.m

    @property
    def free(self) -> bool:
        return self.hermitian_rank == self.dim

    def diag(self) -> list[int]:
        return [self.gram[i][i].a for i in range(self.dim)]

    def __str__(self) -> str:
        return format_gram(self)

    def key(self) -> tuple:
        return (self.m,) + tuple((v.a, v.b) for row in self.gram for v in row)


def lattice(m_or_field, rows) -> HermitianLattice:
    F = make_field(m_or_field) if isinstance(m_or_field, int) else m_or_field
    return HermitianLattice(F, tuple(tuple(F(v) if isinstance(v, int) else v for v in row) for row in rows))


def diagonal(m_or_field, *coeffs: int) -> HermitianLattice:
    n = len(coeffs)
    return lattice(m_or_field, [[coeffs[i] if i == j else 0 for j in range(n)] for i in range(n)])


def hermitian_norm(L: HermitianLattice, x: Sequence[QuadInt]) -> int:
    if len(x) != L.dim:
        raise ValueError(f"expected {L.dim} coordinates, got {len(x)}")
    F = L.field
    total = F.zero
    for i, xi in enumerate(x):
        if isinstance(xi, int):
            xi = F(xi)
        if xi.field != F:
            raise ValueError("field mismatch")
        if not xi:
            continue
        for j, xj in enumerate(x):
            if isinstance(xj, int):
                xj = F(xj)
            if xj:
                total = total + L.gram[i][j] * xi * xj.conj()
    assert total.b == 0
    return total.a


def assoc_matrix(F: QuadIntField, gram) -> list[list[int]]:
    w = F.omega
    scal = (F.one, w)
    d = len(gram)
    A = [[0] * (2 * d) for _ in range(2 * d)]
    for i in range(d):
        for j in range(d):
            g = gram[i][j]
            for s in range(2):
                for t in range(2):
                    # H(w^s v_i, w^t v_j) = w^s conj(w)^t g_ij
                    A[2 * i + s][2 * j + t] = (scal[s] * scal[t].conj() * g).trace()
    return A


def _assoc(L: HermitianLattice) -> ZQuadForm:
    return ZQuadForm(tuple(tuple(r) for r in assoc_matrix(L.field, L.gram)))


def associated_zform(L: HermitianLattice) -> ZQuadForm:
    """Z-form on the basis (v_1, w v_1, ..., v_d, w v_d); entries Tr H(., .)."""
    return L._zform


def split_coordinates(x: Sequence[QuadInt]) -> list[int]:
    """(a_1, b_1, ..., a_d, b_d) for x_i = a_i + b_i w."""
    out = []
    for xi in x:
        out.extend((xi.a, xi.b))
    return out


def join_coordinates(F: QuadIntField, z: Sequence[int]) -> list[QuadInt]:
    return [F(z[2 * i], z[2 * i + 1]) for i in range(len(z) // 2)]


def adjoin_vector(L: HermitianLattice, t: int, column: Sequence[QuadInt]) -> HermitianLattice:
    """Lattice generated by L and a vector v with H(v) = t and H(v_i, v) = column[i]."""
    if t < 1:
        raise ValueError("new norm must be positive")
    if len(column) != L.dim:
        raise ValueError("column length must match lattice dimension")
    F = L.field
    col = [F(c) if isinstance(c, int) else c for c in column]
    rows = [list(r) + [col[i]] for i, r in enumerate(L.gram)]
    rows.append([c.conj() for c in col] + [F(t)])
    return HermitianLattice(F, tuple(tuple(r) for r in rows))


def is_psd_extension(L: HermitianLattice, t: int, column: Sequence[QuadInt]) -> bool:
    try:
        adjoin_vector(L, t, column)
    except ValueError:
        return False
    return True


# ---------------------------------------------------------------------------
# size reduction


def _orbit_key(z: QuadInt) -> tuple:
    """Smaller is more canonical among unit multiples."""
    return (0 if (z.b > 0 or (z.b == 0 and z.a > 0)) else 1, z.b, z.a)


def normalize_unit(z: QuadInt) -> tuple[QuadInt, QuadInt]:
    """(u, u z) with u a unit making u z canonical among unit multiples of z."""
    best = None
    for u in z.field.units():
        k = _orbit_key(u * z)
        if best is None or k < best[0]:
            best = (k, u)
    u = best[1]
    return u, u * z


def _near(q: Fraction) -> list[int]:
    f = floor(q)
    return [f - 1, f, f + 1, f + 2]


def _translate(G: list[list[QuadInt]], j: int, i: int, mu: QuadInt) -> None:
    """v_j <- v_j - mu v_i on a mutable Gram."""
    d = len(G)
    # H(v_j - mu v_i) = g_jj - Tr(mu g_ij) + N(mu) g_ii
    G[j][j] = G[j][j] - (mu * G[i][j]).trace() + mu.norm() * G[i][i]
    for k in range(d):
        if k != j:
            # H(v_k, v_j - mu v_i) = g_kj - conj(mu) g_ki
            G[k][j] = G[k][j] - mu.conj() * G[k][i]
            G[j][k] = G[k][j].conj()


def _scale(G: list[list[QuadInt]], j: int, u: QuadInt) -> None:
    """v_j <- u v_j for a unit u."""
    d = len(G)
    for k in range(d):
        if k != j:
            G[k][j] = G[k][j] * u.conj()
            G[j][k] = G[k][j].conj()


def _best_shift(F: QuadIntField, gii: int, gij: QuadInt, gjj: int) -> tuple[int, tuple, QuadInt]:
    """Translation mu minimizing H(v_j - mu v_i); ties broken by canonical entry."""
    target = gij.conj()
    # mu ~ conj(g_ij)/g_ii written in the basis {1, w}
    qa = Fraction(target.a, gii)
    qb = Fraction(target.b, gii)
    best = None
    for b in _near(qb):
        for a in _near(qa):
            mu = F(a, b)
            new_diag = gjj - (mu * gij).trace() + mu.norm() * gii
            new_entry = gij - mu.conj() * gii
            key = (new_diag, _orbit_key(normalize_unit(new_entry)[1]), (mu.b, mu.a))
            if best is None or key < best[0]:
                best = (key, mu)
    return best[0][0], best[0][1], best[1]


def size_reduce(L: HermitianLattice, max_passes: int = 64) -> HermitianLattice:
    """Best-effort canonical Gram: pairwise translations, unit normalization,
    and removal of zero generators.  Preserves the lattice."""
    F = L.field
    G = [list(r) for r in L.gram]
    for _ in range(max_passes):
        changed = False
        d = len(G)
        for j in range(1, d):
            for i in range(j - 1, -1, -1):
                gii = G[i][i].a
                if gii == 0:
                    continue
                gjj = G[j][j].a
                cur_key = (gjj, _orbit_key(normalize_unit(G[i][j])[1]))
                new_diag, new_key, mu = _best_shift(F, gii, G[i][j], gjj)
                if mu and (new_diag, new_key) < cur_key:
                    _translate(G, j, i, mu)
                    changed = True
        # drop zero generators
        keep = [k for k in range(len(G)) if any(G[k])]
        if len(keep) != len(G):
            G = [[G[a][b] for b in keep] for a in keep]
            changed = True
        if not changed:
            break
    d = len(G)
    for j in range(1, d):
        first = next((i for i in range(j) if G[i][j]), None)
        if first is not None:
            # scaling v_j by u turns g_ij into conj(u) g_ij
            u, _ = normalize_unit(G[first][j])
            _scale(G, j, u.conj())
    return HermitianLattice(F, tuple(tuple(r) for r in G))


def _omega_action(F: QuadIntField, d: int) -> list[list[int]]:
    """Matrix of multiplication by w on coordinates (a_1, b_1, ..., a_d, b_d)."""
    W = [[0] * (2 * d) for _ in range(2 * d)]
    for i in range(d):
        # w (a + b w) = -c b + (a + t b) w, with w^2 = t w - c
        W[2 * i][2 * i + 1] = -F.c
        W[2 * i + 1][2 * i] = 1
        W[2 * i + 1][2 * i + 1] = 1 if F.half else 0
    return W


def find_hermitian_isometry(L: HermitianLattice, M: HermitianLattice):
    """Images of L's generators in M realizing an O-linear isometry onto M, or None.

    Images are given in the reduced coordinates of M's associated Z-form.
    """
    from .zform import prepared

    import numpy as np

    if L.field != M.field:
        raise ValueError("field mismatch")
    P = prepared(M._zform)
    PL = prepared(L._zform)
    if P.dim != PL.dim or P.E[0] != PL.E[0]:
        return None
    r = P.dim
    if r == 0:
        return [()] * L.dim
    W = _omega_action(M.field, M.dim)
    Wred = np.array([[sum(P.proj[i][k] * W[k][l] * P.basis[l][j]
                          for k in range(2 * M.dim) for l in range(2 * M.dim)
                          if P.proj[i][k] and W[k][l] and P.basis[l][j])
                      for j in range(r)] for i in range(r)], dtype=np.int64)
    D = np.array(P.gram, dtype=np.int64)
    diag = L.diag()
    Y, Q = P.vector_array(max(diag))
    cand = [Y[Q == g] if g else np.zeros((1, r), dtype=np.int64) for g in diag]
    w = M.field.omega
    # targets: Tr H(v_j, v_i) and Tr H(v_j, w v_i) = Tr(conj(w) g_ji)
    tr0 = [[L.gram[j][i].trace() for i in range(L.dim)] for j in range(L.dim)]
    tr1 = [[(w.conj() * L.gram[j][i]).trace() for i in range(L.dim)] for j in range(L.dim)]
    chosen: list[np.ndarray] = []
    probes: list[tuple[np.ndarray, np.ndarray]] = []

    def rec(i):
        if i == L.dim:
            return True
        C = cand[i]
        ok = np.ones(len(C), dtype=bool)
        for j, (u0, u1) in enumerate(probes):
            ok &= (C @ u0 == tr0[j][i]) & (C @ u1 == tr1[j][i])
        for y in C[ok]:
            u0 = D @ y
            chosen.append(y)
            probes.append((u0, Wred.T @ u0))
            if rec(i + 1):
                return True
            chosen.pop()
            probes.pop()
        return False

    if not rec(0):
        return None
    return [tuple(int(v) for v in y) for y in chosen]


def is_hermitian_isometric(L: HermitianLattice, M: HermitianLattice) -> bool:
    return find_hermitian_isometry(L, M) is not None


def is_inherited(L: HermitianLattice) -> bool:
    R = size_reduce(L)
    return all(v.b == 0 for row in R.gram for v in row)


# ---------------------------------------------------------------------------
# text and structured formats


def format_gram(L: HermitianLattice, header: bool = True) -> str:
    body = ";".join(",".join(str(v) for v in row) for row in L.gram)
    return f"m={L.m} rank={L.hermitian_rank} {body}" if header else body


def parse_gram(text: str, m_or_field, diag: bool = False) -> HermitianLattice:
    """Parse `1,0;0,2`; with ``diag`` the text `1;2` means <1,2>."""
    F = make_field(m_or_field) if isinstance(m_or_field, int) else m_or_field
    rows = [r for r in text.strip().split(";") if r.strip()]
    if diag:
        vals = [parse_quadint(r, F) for r in rows]
        n = len(vals)
        return HermitianLattice(F, tuple(tuple(vals[i] if i == j else F.zero for j in range(n)) for i in range(n)))
    cells = [[parse_quadint(c, F) for c in r.split(",")] for r in rows]
    return HermitianLattice(F, tuple(tuple(r) for r in cells))


def parse_lattice(text: str) -> HermitianLattice:
    """Parse `m=<int> rank=<int> <rows>`; the rank, when given, is checked."""
    m = rank = None
    body = []
    for tok in text.strip().split():
        if tok.startswith("m="):
            m = int(tok[2:])
        elif tok.startswith("rank="):
            rank = int(tok[5:])
        else:
            body.append(tok)
    if m is None:
        raise ValueError("missing m=<int> header")
    L = parse_gram("".join(body), m)
    if rank is not None and rank != L.hermitian_rank:
        raise ValueError(f"declared rank {rank} but Gram has Hermitian rank {L.hermitian_rank}")
    return L


def to_dict(L: HermitianLattice) -> dict:
    return {
        "m": L.m,
        "dim": L.dim,
        "hermitian_rank": L.hermitian_rank,
        "gram": [[{"a": v.a, "b": v.b} for v in row] for row in L.gram],
    }


def from_dict(doc: dict) -> HermitianLattice:
    F = make_field(int(doc["m"]))
    L = HermitianLattice(F, tuple(tuple(F(c["a"], c["b"]) for c in row) for row in doc["gram"]))
    if "dim" in doc and doc["dim"] != L.dim:
        raise ValueError("dim does not match gram")
    if "hermitian_rank" in doc and doc["hermitian_rank"] != L.hermitian_rank:
        raise ValueError("hermitian_rank does not match gram")
    return L
