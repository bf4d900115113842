"""Combinatorial fingerprints, canonical labeling, isomorphism, automorphisms.

Canonical labeling runs individualization-refinement with orbit pruning by
the automorphisms discovered along the way; vertex counts here are small
(n <= ~25), so simplicity wins over asymptotics.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import Complex, f_vector, link, relabeled


@dataclass(frozen=True)
class GroupDescription:
    generators: tuple  # vertex permutations, sigma[i] = image of vertex i+1
    order: int


def incidence_matrix(C: Complex):
    """Vertex-facet incidence: rows vertices 1..n, columns canonical facets."""
    return [[1 if v in F else 0 for F in C.facets] for v in C.vertices()]


def _det_bareiss(M):
    M = [row[:] for row in M]
    n = len(M)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
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


def as_determinant(C: Complex) -> int:
    """det(A A^T) of the vertex-facet incidence matrix, exactly."""
    n = C.n
    G = [[0] * n for _ in range(n)]
    for F in C.facets:
        for u in F:
            row = G[u - 1]
            for v in F:
                row[v - 1] += 1
    return _det_bareiss(G)


def as_link_determinants(C: Complex) -> tuple:
    """The incidence determinant of every vertex link, by vertex id."""
    return tuple(as_determinant(link(C, (v,))) for v in C.vertices())


def _vertex_facets(C: Complex):
    vf = [[] for _ in range(C.n)]
    for F in C.facets:
        for v in F:
            vf[v - 1].append(F)
    return vf


def _initial_colors(C: Complex):
    # per-dimension face degrees are cheap and isomorphism-invariant
    deg = [[0] * (C.dim + 1) for _ in range(C.n)]
    for k in range(C.dim + 1):
        for F in C.faces(k):
            for v in F:
                deg[v - 1][k] += 1
    keys = sorted(set(map(tuple, deg)))
    index = {key: i for i, key in enumerate(keys)}
    return [index[tuple(row)] for row in deg]


def _refine(colors, vert_facets):
    n = len(colors)
    while True:
        sigs = []
        for v in range(n):
            patt = sorted(
                tuple(sorted(colors[u - 1] for u in F if u != v + 1))
                for F in vert_facets[v])
            sigs.append((colors[v], tuple(patt)))
        order = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [order[sig] for sig in sigs]
        if len(set(new)) == len(set(colors)) and new == colors:
            return colors
        if len(set(new)) == len(set(colors)):
            # same partition, stabilized up to renaming
            return new
        colors = new


def _relabel_key(facets, perm):
    return tuple(sorted(tuple(sorted(perm[v - 1] for v in F)) for F in facets))


def canonical_form(C: Complex):
    """A canonical representative and the relabeling that produces it.

    Isomorphic complexes map to identical facet lists; the representative is
    the lexicographically smallest relabeled facet list reachable through
    refinement-respecting labelings.
    """
    n = C.n
    facets = C.facets
    vert_facets = _vertex_facets(C)
    best: list = [None, None]  # key, perm
    autos: list = []

    def rec(colors, prefix):
        colors = _refine(colors, vert_facets)
        cells: dict = {}
        for v in range(n):
            cells.setdefault(colors[v], []).append(v + 1)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            perm = tuple(c + 1 for c in colors)
            key = _relabel_key(facets, perm)
            if best[0] is None or key < best[0]:
                best[0], best[1] = key, perm
            elif key == best[0]:
                inv = [0] * n
                for v in range(n):
                    inv[best[1][v] - 1] = v + 1
                autos.append(tuple(inv[perm[v] - 1] for v in range(n)))
            return
        explored: list = []
        for v in target:
            stab = [g for g in autos if all(g[u - 1] == u for u in prefix)]
            if _in_orbit(v, explored, stab):
                continue
            explored.append(v)
            split = [2 * c for c in colors]
            split[v - 1] -= 1
            rec(split, prefix + (v,))

    rec(_initial_colors(C), ())
    return relabeled(C, best[1]), best[1]


def _in_orbit(v, explored, gens):
    if not gens or not explored:
        return False
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x - 1]
            if y in explored:
                return True
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return False


def are_isomorphic(C1: Complex, C2: Complex) -> bool:
    """Canonical-form equality, behind cheap invariant rejections."""
    if C1.dim != C2.dim or C1.n != C2.n:
        return False
    if f_vector(C1).counts != f_vector(C2).counts:
        return False
    if sorted(as_link_determinants(C1)) != sorted(as_link_determinants(C2)):
        return False
    return canonical_form(C1)[0] == canonical_form(C2)[0]


def _strong_colors(C: Complex, vert_facets):
    """Refined coloring, falling back to link determinants when the cheap
    signatures stall (neighborly complexes defeat degree-based invariants)."""
    colors = _refine(_initial_colors(C), vert_facets)
    if len(set(colors)) < C.n:
        dets = as_link_determinants(C)
        order = {key: i for i, key in enumerate(sorted(set(zip(colors, dets))))}
        colors = _refine([order[key] for key in zip(colors, dets)], vert_facets)
    return colors


def _all_automorphisms(C: Complex):
    n = C.n
    facet_set = set(C.facets)
    vert_facets = _vertex_facets(C)
    colors = _strong_colors(C, vert_facets)
    adjacent = set()
    for F in C.facets:
        adjacent.update(itertools.combinations(F, 2))
    order = sorted(range(1, n + 1), key=lambda v: (colors[v - 1], v))
    found = []
    image = {}
    used = set()

    def ok(u, w):
        for u2, w2 in image.items():
            pair_in = (min(u, u2), max(u, u2)) in adjacent
            pair_out = (min(w, w2), max(w, w2)) in adjacent
            if pair_in != pair_out:
                return False
        for F in vert_facets[u - 1]:
            if all(x == u or x in image for x in F):
                img = tuple(sorted(w if x == u else image[x] for x in F))
                if img not in facet_set:
                    return False
        return True

    def rec(k):
        if k == n:
            perm = tuple(image[v] for v in range(1, n + 1))
            found.append(perm)
            return
        u = order[k]
        for w in range(1, n + 1):
            if w in used or colors[w - 1] != colors[u - 1]:
                continue
            if not ok(u, w):
                continue
            image[u] = w
            used.add(w)
            rec(k + 1)
            del image[u]
            used.discard(w)

    rec(0)
    return found


def _closure(gens, n):
    identity = tuple(range(1, n + 1))
    group = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(p[g[i] - 1] for i in range(n))
                if q not in group:
                    group.add(q)
                    nxt.append(q)
        frontier = nxt
    return group


def automorphism_group(C: Complex) -> GroupDescription:
    """Generators and exact order of the facet-preserving vertex permutations."""
    elements = _all_automorphisms(C)
    n = C.n
    gens: list = []
    closed = {tuple(range(1, n + 1))}
    for g in sorted(elements):
        if g not in closed:
            gens.append(g)
            closed = _closure(gens, n)
    return GroupDescription(tuple(gens), len(elements))
