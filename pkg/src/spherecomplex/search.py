"""Backtracking search over flag complexes.

Embeddings here are injective simplicial maps: adjacent vertices must map
to adjacent vertices, but non-adjacency need not be reflected.
Isomorphisms preserve and reflect adjacency.  Locally injective maps are
simplicial maps injective on every closed star, which for graphs is the
same as being injective on every pair of vertices at distance at most 2.

All searches are deterministic: candidates are tried in canonical
(lexicographic id) order and results are emitted in canonical order.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Optional, Sequence

from .flagcomplex import FlagComplex, FVector, _bits, f_vector, has_cycle, maximal_cliques


class VertexMap:
    """A total map between the vertex sets of two flag complexes."""

    __slots__ = ("source", "target", "assignment")

    def __init__(self, source: FlagComplex, target: FlagComplex,
                 assignment: Mapping[str, str]):
        self.source = source
        self.target = target
        self.assignment = dict(assignment)
        missing = set(source.vertices) - set(self.assignment)
        if missing:
            raise ValueError("assignment not total, missing %r" % (sorted(missing)[0],))
        for v, w in self.assignment.items():
            if v not in source:
                raise ValueError("unknown source vertex %r" % (v,))
            if w not in target:
                raise ValueError("unknown target vertex %r" % (w,))

    def __getitem__(self, v: str) -> str:
        return self.assignment[v]

    def is_simplicial(self) -> bool:
        """Images of adjacent vertices are adjacent or equal."""
        for u, v in self.source.edges():
            fu, fv = self.assignment[u], self.assignment[v]
            if fu != fv and not self.target.adjacent(fu, fv):
                return False
        return True

    def is_injective(self) -> bool:
        return len(set(self.assignment.values())) == len(self.assignment)

    def is_locally_injective(self) -> bool:
        """Injective on every closed star of the source."""
        for v in self.source.vertices:
            star = (v,) + self.source.neighbors(v)
            images = [self.assignment[u] for u in star]
            if len(set(images)) != len(images):
                return False
        return True

    def key(self) -> tuple[str, ...]:
        """Canonical sort key: images in source vertex order."""
        return tuple(self.assignment[v] for v in self.source.vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, VertexMap):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.assignment == other.assignment)

    def __hash__(self) -> int:
        return hash((tuple(sorted(self.assignment.items())),))

    def __repr__(self) -> str:
        return "VertexMap(%d -> %d vertices)" % (
            self.source.n_vertices, self.target.n_vertices)


def _search_order(c: FlagComplex) -> list[int]:
    """Vertex processing order: breadth-first from a highest-degree
    vertex, restarting per component, so each vertex after the first in
    its component has an already-placed neighbor."""
    n = c.n_vertices
    degs = [c._adj[i].bit_count() for i in range(n)]
    seen = [False] * n
    order: list[int] = []
    remaining = sorted(range(n), key=lambda i: (-degs[i], i))
    for start in remaining:
        if seen[start]:
            continue
        seen[start] = True
        queue = [start]
        while queue:
            i = queue.pop(0)
            order.append(i)
            nbrs = sorted(_bits(c._adj[i]), key=lambda j: (-degs[j], j))
            for j in nbrs:
                if not seen[j]:
                    seen[j] = True
                    queue.append(j)
    return order


def _degree_feasible(src: FlagComplex, dst: FlagComplex) -> list[int]:
    """Candidate masks for an injective simplicial map: feasible[i] has
    bit j set when source vertex i may map to target vertex j, judged by
    degree and sorted neighbor-degree domination."""
    ns, nt = src.n_vertices, dst.n_vertices
    sdeg = [src._adj[i].bit_count() for i in range(ns)]
    tdeg = [dst._adj[j].bit_count() for j in range(nt)]
    snbr = [sorted((sdeg[k] for k in _bits(src._adj[i])), reverse=True) for i in range(ns)]
    tnbr = [sorted((tdeg[k] for k in _bits(dst._adj[j])), reverse=True) for j in range(nt)]
    feas = []
    for i in range(ns):
        m = 0
        for j in range(nt):
            if tdeg[j] < sdeg[i]:
                continue
            if any(t < s for s, t in zip(snbr[i], tnbr[j])):
                continue
            m |= 1 << j
        feas.append(m)
    return feas


def search_embedding(src: FlagComplex, dst: FlagComplex,
                     use_acyclicity_shortcut: bool = True) -> Optional[VertexMap]:
    """Find an injective simplicial map src -> dst, or certify absence.

    Absence is certified by exhausting the search tree, except for two
    sound shortcuts: a vertex-count precheck, and (on by default) the
    acyclicity shortcut -- an injective simplicial map carries cycles to
    cycles, so a cyclic source never embeds into an acyclic target.
    """
    if src.n_vertices > dst.n_vertices:
        return None
    if use_acyclicity_shortcut and not has_cycle(dst) and has_cycle(src):
        return None
    n, order = src.n_vertices, _search_order(src)
    if n == 0:
        return VertexMap(src, dst, {})
    feas = _degree_feasible(src, dst)
    adj_s, adj_t = src._adj, dst._adj
    full_t = (1 << dst.n_vertices) - 1
    placed = [-1] * n

    def backtrack(pos: int, used: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        cand = feas[v] & ~used
        for u in _bits(adj_s[v]):
            if placed[u] >= 0:
                cand &= adj_t[placed[u]]
        for w in _bits(cand & full_t):
            placed[v] = w
            if backtrack(pos + 1, used | (1 << w)):
                return True
            placed[v] = -1
        return False

    if backtrack(0, 0):
        assignment = {src.vertices[i]: dst.vertices[placed[i]] for i in range(n)}
        m = VertexMap(src, dst, assignment)
        assert m.is_injective() and m.is_simplicial()
        return m
    return None


def _iso_precheck(c1: FlagComplex, c2: FlagComplex) -> bool:
    if c1.n_vertices != c2.n_vertices or c1.n_edges != c2.n_edges:
        return False
    d1 = sorted(c1._adj[i].bit_count() for i in range(c1.n_vertices))
    d2 = sorted(c2._adj[i].bit_count() for i in range(c2.n_vertices))
    if d1 != d2:
        return False
    dim = min(2, max(c1.n_vertices - 1, 0))
    return f_vector(c1, dim) == f_vector(c2, dim)


def _enumerate_isomorphisms(c1: FlagComplex, c2: FlagComplex,
                            find_all: bool) -> list[list[int]]:
    """Backtracking over bijections preserving and reflecting adjacency.
    Returns placements (index arrays); all of them when find_all."""
    n = c1.n_vertices
    if n == 0:
        return [[]]
    order = _search_order(c1)
    adj1, adj2 = c1._adj, c2._adj
    deg1 = [m.bit_count() for m in adj1]
    deg2 = [m.bit_count() for m in adj2]
    full = (1 << n) - 1
    placed = [-1] * n
    results: list[list[int]] = []

    def backtrack(pos: int, used: int) -> bool:
        if pos == n:
            results.append(placed[:])
            return not find_all
        v = order[pos]
        cand = ~used & full
        for u in _bits(adj1[v]):
            if placed[u] >= 0:
                cand &= adj2[placed[u]]
        for w in _bits(cand):
            if deg2[w] != deg1[v]:
                continue
            ok = True
            for u in range(n):
                if placed[u] >= 0 and not ((adj1[v] >> u) & 1) and ((adj2[w] >> placed[u]) & 1):
                    ok = False
                    break
            if not ok:
                continue
            placed[v] = w
            if backtrack(pos + 1, used | (1 << w)):
                return True
            placed[v] = -1
        return False

    backtrack(0, 0)
    return results


def search_isomorphism(c1: FlagComplex, c2: FlagComplex) -> Optional[VertexMap]:
    """Find a bijection preserving and reflecting adjacency, or certify
    absence (after a cheap f-vector and degree-sequence precheck)."""
    if not _iso_precheck(c1, c2):
        return None
    found = _enumerate_isomorphisms(c1, c2, find_all=False)
    if not found:
        return None
    placed = found[0]
    assignment = {c1.vertices[i]: c2.vertices[placed[i]] for i in range(c1.n_vertices)}
    return VertexMap(c1, c2, assignment)


def enumerate_automorphisms(c: FlagComplex) -> list[VertexMap]:
    """All automorphisms, in canonical order."""
    placements = _enumerate_isomorphisms(c, c, find_all=True)
    maps = [VertexMap(c, c, {c.vertices[i]: c.vertices[p[i]]
                             for i in range(c.n_vertices)})
            for p in placements]
    maps.sort(key=VertexMap.key)
    return maps


class AutomorphismGroup:
    """The automorphism group of a finite flag complex.

    ``elements`` is the full list when the order is at most
    ``ELEMENT_CAP``, else None.  Generators are chosen greedily in
    canonical element order, so they are deterministic.
    """

    ELEMENT_CAP = 10_000

    __slots__ = ("complex", "order", "generators", "elements")

    def __init__(self, complex_: FlagComplex, order: int,
                 generators: list[VertexMap], elements: Optional[list[VertexMap]]):
        self.complex = complex_
        self.order = order
        self.generators = generators
        self.elements = elements


def automorphism_group(c: FlagComplex) -> AutomorphismGroup:
    """Compute the automorphism group by exhaustive backtracking."""
    elements = enumerate_automorphisms(c)
    order = len(elements)
    verts = c.vertices
    perms = [tuple(m.assignment[v] for v in verts) for m in elements]
    perm_set = set(perms)
    identity = tuple(verts)
    index = {v: i for i, v in enumerate(verts)}

    def compose(p: tuple[str, ...], q: tuple[str, ...]) -> tuple[str, ...]:
        # apply q after p
        return tuple(q[index[x]] for x in p)

    def close(gens: list[tuple[str, ...]]) -> set[tuple[str, ...]]:
        closure = {identity}
        queue = [identity]
        while queue:
            a = queue.pop()
            for g in gens:
                b = compose(a, g)
                if b not in closure:
                    closure.add(b)
                    queue.append(b)
        return closure

    generators: list[tuple[str, ...]] = []
    closure = {identity}
    for p in perms:
        if p in closure:
            continue
        generators.append(p)
        closure = close(generators)
        if len(closure) == order:
            break
    assert closure <= perm_set and len(closure) == order
    gen_maps = [VertexMap(c, c, dict(zip(verts, p))) for p in generators]
    kept = elements if order <= AutomorphismGroup.ELEMENT_CAP else None
    return AutomorphismGroup(c, order, gen_maps, kept)


def _dist2_masks(c: FlagComplex) -> list[int]:
    """For each vertex, the mask of other vertices at distance 1 or 2."""
    n = c.n_vertices
    out = []
    for i in range(n):
        m = c._adj[i]
        for j in _bits(c._adj[i]):
            m |= c._adj[j]
        out.append(m & ~(1 << i))
    return out


def enumerate_locally_injective_maps(
        X: FlagComplex, target: FlagComplex,
        require_maximal: bool = False,
        ambient_maximal_cliques: Optional[Iterable[Sequence[str]]] = None,
) -> list[VertexMap]:
    """All simplicial maps X -> target that are injective on closed
    stars, in canonical order.

    When ``require_maximal`` is set, the caller supplies the maximal
    sphere systems of the ambient complex that lie inside X (as vertex
    sequences); only maps carrying each of them onto a maximal clique of
    the target are kept.
    """
    if require_maximal and ambient_maximal_cliques is None:
        raise ValueError("require_maximal needs ambient_maximal_cliques")
    n = X.n_vertices
    if n == 0:
        return [VertexMap(X, target, {})]
    order = _search_order(X)
    adj_x, adj_t = X._adj, target._adj
    dist2 = _dist2_masks(X)
    full_t = (1 << target.n_vertices) - 1
    placed = [-1] * n
    results: list[list[int]] = []

    def backtrack(pos: int) -> None:
        if pos == n:
            results.append(placed[:])
            return
        v = order[pos]
        cand = full_t
        for u in _bits(adj_x[v]):
            if placed[u] >= 0:
                cand &= adj_t[placed[u]]
        if cand:
            forbidden = 0
            for u in _bits(dist2[v]):
                if placed[u] >= 0:
                    forbidden |= 1 << placed[u]
            cand &= ~forbidden
        for w in _bits(cand):
            placed[v] = w
            backtrack(pos + 1)
        placed[v] = -1

    backtrack(0)

    maps = [VertexMap(X, target, {X.vertices[i]: target.vertices[p[i]]
                                  for i in range(n)})
            for p in results]
    if require_maximal:
        target_maximal = {frozenset(q) for q in maximal_cliques(target)}
        kept = []
        for m in maps:
            ok = True
            for clique in ambient_maximal_cliques:
                image = frozenset(m.assignment[v] for v in clique)
                if image not in target_maximal:
                    ok = False
                    break
            if ok:
                kept.append(m)
        maps = kept
    maps.sort(key=VertexMap.key)
    return maps
