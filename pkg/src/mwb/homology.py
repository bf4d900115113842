"""Exact simplicial homology over Z and Z_p via Smith normal form.

All arithmetic is unbounded-integer; matrices are handled sparsely with
pivoting on small entries so that intermediate growth stays harmless at the
sizes that occur here (a few hundred to ~1100 columns).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .core import Complex, f_vector, is_pseudomanifold
from .errors import NotPseudomanifold


@dataclass(frozen=True)
class HomologyVector:
    """Per dimension: free rank and torsion in invariant-factor form."""

    free: tuple
    torsion: tuple  # tuple of tuples of ints >= 2, each dividing the next

    def __str__(self):
        parts = []
        for r, tors in zip(self.free, self.torsion):
            terms = []
            if r == 1:
                terms.append("Z")
            elif r > 1:
                terms.append(f"Z^{r}")
            terms.extend(f"Z_{t}" for t in tors)
            parts.append(" + ".join(terms) if terms else "0")
        return "(" + ", ".join(parts) + ")"

    @property
    def euler(self):
        return sum(r if k % 2 == 0 else -r for k, r in enumerate(self.free))


@dataclass(frozen=True)
class BettiVector:
    coefficients: object  # 0 for Q, else a prime p
    ranks: tuple

    def __str__(self):
        field = "Q" if self.coefficients == 0 else f"F_{self.coefficients}"
        return f"{field}: {self.ranks}"


def boundary_matrix(C: Complex, k: int):
    """The k-th boundary operator as a dense integer matrix.

    Rows are indexed by the (k-1)-faces, columns by the k-faces, both in the
    canonical sorted order; the column of a k-face carries alternating signs
    on its vertex-deleted subfaces.
    """
    if not 1 <= k <= C.dim:
        raise ValueError("k out of range")
    rows = C.faces(k - 1)
    cols = C.faces(k)
    row_index = {F: i for i, F in enumerate(rows)}
    M = [[0] * len(cols) for _ in rows]
    for j, G in enumerate(cols):
        for i in range(k + 1):
            face = G[:i] + G[i + 1:]
            M[row_index[face]][j] = -1 if i % 2 else 1
    return M


def _sparse_boundary(C: Complex, k: int):
    rows_of = {F: i for i, F in enumerate(C.faces(k - 1))}
    rows: dict = {}
    cols: dict = {}
    for j, G in enumerate(C.faces(k)):
        for i in range(k + 1):
            r = rows_of[G[:i] + G[i + 1:]]
            rows.setdefault(r, {})[j] = -1 if i % 2 else 1
            cols.setdefault(j, set()).add(r)
    return rows, cols


def _pick_pivot(rows, cols):
    best = None
    best_key = None
    for i, row in rows.items():
        li = len(row) - 1
        for j, v in row.items():
            key = (0 if abs(v) == 1 else 1, li * (len(cols[j]) - 1), abs(v))
            if best_key is None or key < best_key:
                best_key = key
                best = (i, j)
                if key[0] == 0 and key[1] == 0:
                    return best
    return best


def _round_div(a, p):
    # nearest-integer quotient so the remainder has magnitude <= |p|/2
    q, r = divmod(a, p)
    if 2 * abs(r) > abs(p):
        q += 1
    return q


def _diagonal_of(rows, cols):
    """Diagonalize a sparse integer matrix in place; return diagonal entries."""

    def row_axpy(dst, src, coef):
        # row[dst] += coef * row[src]
        rdst = rows.get(dst)
        if rdst is None:
            rdst = rows[dst] = {}
        for j, v in rows[src].items():
            new = rdst.get(j, 0) + coef * v
            if new:
                rdst[j] = new
                cols[j].add(dst)
            elif j in rdst:
                del rdst[j]
                cols[j].discard(dst)
        if not rdst:
            del rows[dst]

    def col_axpy(dst, src, coef):
        cdst = cols.get(dst)
        if cdst is None:
            cdst = cols[dst] = set()
        for i in list(cols[src]):
            v = rows[i][src]
            new = rows[i].get(dst, 0) + coef * v
            if new:
                rows[i][dst] = new
                cdst.add(i)
            elif dst in rows[i]:
                del rows[i][dst]
                cdst.discard(i)
        if not cdst:
            del cols[dst]

    diag = []
    while rows:
        r, c = _pick_pivot(rows, cols)
        while True:
            p = rows[r][c]
            moved = False
            for i in list(cols[c]):
                if i == r:
                    continue
                q = _round_div(rows[i][c], p)
                if q:
                    row_axpy(i, r, -q)
                if rows.get(i, {}).get(c):
                    r = i  # strictly smaller remainder becomes the pivot
                    moved = True
                    break
            if moved:
                continue
            p = rows[r][c]
            for j in list(rows[r]):
                if j == c:
                    continue
                q = _round_div(rows[r][j], p)
                if q:
                    col_axpy(j, c, -q)
                if rows.get(r, {}).get(j):
                    c = j
                    moved = True
                    break
            if not moved:
                break
        diag.append(abs(rows[r][c]))
        for j in list(rows[r]):
            cols[j].discard(r)
            if not cols[j]:
                del cols[j]
        del rows[r]
        if c in cols:
            for i in list(cols[c]):
                del rows[i][c]
                if not rows[i]:
                    del rows[i]
            del cols[c]
    return diag


def _invariant_factors(diag):
    factors = [abs(x) for x in diag if x]
    changed = True
    while changed:
        changed = False
        for i in range(len(factors)):
            for j in range(i + 1, len(factors)):
                a, b = factors[i], factors[j]
                if b % a:
                    g = gcd(a, b)
                    factors[i], factors[j] = g, a * b // g
                    changed = True
    return tuple(sorted(factors))


def smith_normal_form(M):
    """Invariant factors d1 | d2 | ... and the rank of an integer matrix."""
    rows: dict = {}
    cols: dict = {}
    for i, row in enumerate(M):
        for j, v in enumerate(row):
            if v:
                rows.setdefault(i, {})[j] = v
                cols.setdefault(j, set()).add(i)
    factors = _invariant_factors(_diagonal_of(rows, cols))
    return factors, len(factors)


@lru_cache(maxsize=256)
def _boundary_snf(C: Complex, k: int):
    rows, cols = _sparse_boundary(C, k)
    return _invariant_factors(_diagonal_of(rows, cols))


@lru_cache(maxsize=256)
def homology(C: Complex) -> HomologyVector:
    """Unreduced integral homology H_0..H_d from boundary-map SNFs."""
    d = C.dim
    fv = f_vector(C).counts
    rank = [0] * (d + 2)
    factors = [()] * (d + 2)
    for k in range(1, d + 1):
        factors[k] = _boundary_snf(C, k)
        rank[k] = len(factors[k])
    free = tuple(fv[k] - rank[k] - rank[k + 1] for k in range(d + 1))
    torsion = tuple(tuple(t for t in factors[k + 1] if t > 1) for k in range(d + 1))
    return HomologyVector(free, torsion)


def _rank_mod_p(rows, cols, p):
    for row in rows.values():
        for j in list(row):
            row[j] %= p
            if not row[j]:
                del row[j]
    for j in list(cols):
        cols[j] = {i for i in cols[j] if j in rows.get(i, {})}
        if not cols[j]:
            del cols[j]
    rows = {i: r for i, r in rows.items() if r}
    rank = 0
    while rows:
        # cheapest pivot by fill
        i, row = min(rows.items(), key=lambda kv: len(kv[1]))
        j = min(row, key=lambda jj: len(cols[jj]))
        inv = pow(row[j], -1, p)
        rank += 1
        piv = {jj: (v * inv) % p for jj, v in row.items()}
        for i2 in list(cols[j]):
            if i2 == i:
                continue
            r2 = rows[i2]
            coef = r2[j]
            for jj, v in piv.items():
                new = (r2.get(jj, 0) - coef * v) % p
                if new:
                    r2[jj] = new
                    cols[jj].add(i2)
                else:
                    if jj in r2:
                        del r2[jj]
                    cols[jj].discard(i2)
            if not r2:
                del rows[i2]
        for jj in piv:
            cols[jj].discard(i)
            if not cols[jj]:
                del cols[jj]
        del rows[i]
    return rank


@lru_cache(maxsize=256)
def betti(C: Complex, p: int = 0) -> BettiVector:
    """Betti numbers over Q (p=0) or over the field Z_p (p prime)."""
    d = C.dim
    fv = f_vector(C).counts
    rank = [0] * (d + 2)
    for k in range(1, d + 1):
        if p == 0:
            rank[k] = len(_boundary_snf(C, k))
        else:
            rows, cols = _sparse_boundary(C, k)
            rank[k] = _rank_mod_p(rows, cols, p)
    ranks = tuple(fv[k] - rank[k] - rank[k + 1] for k in range(d + 1))
    return BettiVector(p, ranks)


def reduced_betti(C: Complex, p: int = 0) -> tuple:
    """Reduced Betti numbers: b~_0 = b_0 - 1, higher ones unchanged."""
    b = betti(C, p).ranks
    return (b[0] - 1,) + b[1:]


def orientation_signs(C: Complex):
    """Coherent facet orientations (facet -> +-1), or None if impossible.

    Deterministic: the lexicographically first facet gets +1.
    """
    pm = is_pseudomanifold(C)
    if not pm:
        raise NotPseudomanifold(pm.witness)
    sign: dict = {C.facets[0]: 1}
    stack = [C.facets[0]]
    adj: dict = {F: [] for F in C.facets}
    for R, (F, G) in C.ridges().items():
        adj[F].append((R, G))
        adj[G].append((R, F))
    while stack:
        F = stack.pop()
        for R, G in adj[F]:
            i = F.index((set(F) - set(R)).pop())
            j = G.index((set(G) - set(R)).pop())
            s = -sign[F] * (-1) ** (i + j)
            if G in sign:
                if sign[G] != s:
                    return None
            else:
                sign[G] = s
                stack.append(G)
    return sign


def orientability(C: Complex) -> str:
    """Decide orientability by propagating coherent facet orientations."""
    return "orientable" if orientation_signs(C) is not None else "non-orientable"
