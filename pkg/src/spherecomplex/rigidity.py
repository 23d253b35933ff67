"""Rigidity certification and the surrounding machinery.

A subcomplex X of an ambient sphere complex is strongly rigid when every
locally injective simplicial map X -> ambient extends uniquely to an
ambient automorphism; over maximal maps the candidate set is restricted
to maps carrying maximal sphere systems inside X to maximal systems.
This module certifies that by exhaustive enumeration, and computes the
supporting objects: split spheres and split pairs, X-detectable
intersections, X_sigma, link equivalence classes with their complementary
regions, the caterpillar non-rigidity witness, and the good-pair census
on cut labelings.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Optional

from .flagcomplex import FlagComplex, is_connected, link_of, maximal_cliques
from .genus_zero import (CaterpillarWindow, ManifoldSignature, SpherePartition,
                         build_genus_zero_complex)
from .pants import PantsDecomposition, SphereSystem, flip_partners
from .search import VertexMap, automorphism_group, enumerate_locally_injective_maps

PLAIN = "plain"
OVER_MAXIMAL_MAPS = "over-maximal-maps"


@dataclass(frozen=True)
class RigidityCertificate:
    """Outcome of exhaustive rigidity verification.

    ``extensions`` lists, per enumerated map, the index of the unique
    ambient automorphism it restricts, or None; ``all_extend`` holds iff
    every map matches exactly one automorphism.  ``counterexample`` is
    the assignment of the first failing map, if any.
    """

    subcomplex_id: str
    ambient_id: str
    mode: str
    total_maps: int
    all_extend: bool
    extensions: tuple[Optional[int], ...]
    counterexample: Optional[dict[str, str]]
    automorphism_order: int


def complex_id(c: FlagComplex) -> str:
    name = c.meta.get("name")
    if name:
        return str(name)
    if c.meta.get("model") == "genus-zero":
        return "genus-zero:s=%d" % (c.meta["s"],)
    if c.meta.get("model") == "caterpillar":
        return "caterpillar:m=%d" % (c.meta["m"],)
    return "complex:%dv,%de" % (c.n_vertices, c.n_edges)


def verify_rigidity(X_vertices: Iterable[str], ambient: FlagComplex,
                    mode: str = PLAIN) -> RigidityCertificate:
    """Enumerate all locally injective simplicial maps of the induced
    subcomplex into the ambient complex and test unique extension."""
    if mode not in (PLAIN, OVER_MAXIMAL_MAPS):
        raise ValueError("unknown mode: %r" % (mode,))
    xs = sorted(set(X_vertices))
    X = ambient.induced(xs)
    kwargs = {}
    if mode == OVER_MAXIMAL_MAPS:
        inside = [q for q in maximal_cliques(ambient) if set(q) <= set(xs)]
        kwargs = {"require_maximal": True, "ambient_maximal_cliques": inside}
    maps = enumerate_locally_injective_maps(X, ambient, **kwargs)
    group = automorphism_group(ambient)
    assert group.elements is not None, "ambient automorphism group too large to list"
    restrictions: dict[tuple[str, ...], list[int]] = {}
    for idx, aut in enumerate(group.elements):
        key = tuple(aut.assignment[v] for v in xs)
        restrictions.setdefault(key, []).append(idx)

    extensions: list[Optional[int]] = []
    counterexample: Optional[dict[str, str]] = None
    for m in maps:
        key = tuple(m.assignment[v] for v in xs)
        matches = restrictions.get(key, [])
        if len(matches) == 1:
            extensions.append(matches[0])
        else:
            extensions.append(None)
            if counterexample is None:
                counterexample = dict(m.assignment)
    all_extend = all(e is not None for e in extensions)
    return RigidityCertificate(
        subcomplex_id=";".join(xs),
        ambient_id=complex_id(ambient),
        mode=mode,
        total_maps=len(maps),
        all_extend=all_extend,
        extensions=tuple(extensions),
        counterexample=counterexample,
        automorphism_order=group.order,
    )


def label_action_automorphisms(s: int) -> list[VertexMap]:
    """The automorphisms of the genus-zero complex induced by permuting
    the boundary labels 1..s, in canonical order."""
    c = build_genus_zero_complex(s)
    out = []
    seen = set()
    for perm in permutations(range(1, s + 1)):
        relabel = dict(zip(range(1, s + 1), perm))
        assignment = {}
        for vid in c.vertices:
            sp = SpherePartition.from_vertex_id(vid)
            assignment[vid] = SpherePartition(s, [relabel[x] for x in sp.block]).vertex_id()
        key = tuple(sorted(assignment.items()))
        if key in seen:
            continue
        seen.add(key)
        out.append(VertexMap(c, c, assignment))
    out.sort(key=VertexMap.key)
    return out


def find_split_spheres(P: PantsDecomposition, a: str) -> list[str]:
    """All spheres b outside P that intersect a and are disjoint from
    every other member of P: the spheres for which a is the unique
    member of P they intersect."""
    if a not in P.members:
        raise ValueError("%r is not a member of the decomposition" % (a,))
    c = P.complex
    out = []
    for b in c.vertices:
        if b in P.members:
            continue
        if c.adjacent(a, b):
            continue  # b is disjoint from a, not a split sphere
        if all(c.adjacent(b, m) for m in P.members if m != a):
            out.append(b)
    return out


def find_split_pairs(a: str, X_vertices: Iterable[str],
                     ambient: FlagComplex) -> list[tuple[str, str]]:
    """All pairs of distinct, disjoint split spheres for a arising from
    pants decompositions contained in X.  Pairs are unordered and
    canonically sorted."""
    xs = set(X_vertices)
    if a not in xs:
        raise ValueError("a must lie in X")
    candidates: set[str] = set()
    for q in maximal_cliques(ambient):
        if a in q and set(q) <= xs:
            candidates.update(find_split_spheres(PantsDecomposition(ambient, q), a))
    pairs = [(b1, b2) for b1, b2 in combinations(sorted(candidates), 2)
             if ambient.adjacent(b1, b2)]
    return pairs


def detect_x_detectable(X_vertices: Iterable[str], ambient: FlagComplex,
                        a: str, a2: str) -> Optional[tuple[tuple[str, ...], tuple[str, ...]]]:
    """A witness that a and a2 have an X-detectable intersection: two
    pants decompositions inside X differing exactly by the flip a -> a2,
    or None.  Any witness implies the two spheres intersect (checked).
    """
    xs = set(X_vertices)
    if a not in xs or a2 not in xs:
        raise ValueError("a and a2 must lie in X")
    if a == a2:
        raise ValueError("a and a2 must differ")
    for q in maximal_cliques(ambient):
        if a not in q or not set(q) <= xs:
            continue
        P = PantsDecomposition(ambient, q)
        if a2 in flip_partners(P, a):
            other = tuple(sorted((P.members - {a}) | {a2}))
            assert not ambient.adjacent(a, a2), \
                "flip-related spheres must intersect"
            return (tuple(sorted(q)), other)
    return None


def build_x_sigma(sigma: PantsDecomposition) -> FlagComplex:
    """The induced subcomplex on sigma plus the link of every co-member
    set sigma minus a.  In genus zero each such link has exactly three
    vertices: a and its two flip partners."""
    c = sigma.complex
    vs = set(sigma.members)
    for a in sigma.members:
        lk = link_of(c, sigma.members - {a})
        vs.update(lk.vertices)
    return c.induced(vs)


class TransitivityError(AssertionError):
    """The link relation failed transitivity on an instance; this would
    falsify the complementary-component correspondence in-model and is
    a modeling bug, not a data error."""


@dataclass(frozen=True)
class LinkClass:
    members: tuple[str, ...]
    region_labels: tuple[int, ...]   # boundary labels inside the region
    region_spheres: tuple[str, ...]  # sphere ids cutting the region off
    factor: ManifoldSignature


@dataclass(frozen=True)
class LinkClasses:
    classes: tuple[LinkClass, ...]

    def as_partition(self) -> list[tuple[str, ...]]:
        return [cl.members for cl in self.classes]


def _laminar_regions(sigma: SphereSystem, s: int):
    """Regions of the complement of a sphere system in the genus-zero
    model.  Returns (blocks, regions) where blocks are the members'
    away-from-1 label blocks and each region is a tuple
    (key, labels, spheres, boundary_count) with key None for the root
    region or the index of the member block bounding it from outside."""
    blocks = []
    for vid in sorted(sigma.members):
        sp = SpherePartition.from_vertex_id(vid)
        blocks.append((sp.other_block, vid))
    root = frozenset(range(1, s + 1))
    parent_of: dict[int, Optional[int]] = {}
    for i in range(len(blocks)):
        best: Optional[int] = None
        for j in range(len(blocks)):
            if blocks[i][0] < blocks[j][0]:
                if best is None or len(blocks[j][0]) < len(blocks[best][0]):
                    best = j
        parent_of[i] = best
    children: dict[Optional[int], list[int]] = {None: []}
    for i in range(len(blocks)):
        children.setdefault(i, [])
        children.setdefault(parent_of[i], []).append(i)
    regions = []
    for key in [None] + sorted(range(len(blocks)),
                               key=lambda i: (-len(blocks[i][0]), sorted(blocks[i][0]))):
        zone = root if key is None else blocks[key][0]
        inner: set[int] = set()
        for ch in children.get(key, []):
            inner |= blocks[ch][0]
        labels = tuple(sorted(zone - inner))
        spheres = []
        if key is not None:
            spheres.append(blocks[key][1])
        spheres.extend(blocks[ch][1] for ch in children.get(key, []))
        boundary = len(labels) + len(spheres)
        regions.append((key, labels, tuple(sorted(spheres)), boundary))
    return blocks, regions


def _region_of_link_vertex(vid: str, blocks) -> Optional[int]:
    """The region key (None = root) a link sphere lies in: the minimal
    member block strictly containing its canonical away-from-1 block."""
    b = SpherePartition.from_vertex_id(vid).other_block
    best: Optional[int] = None
    for i, (blk, _) in enumerate(blocks):
        if b < blk:
            if best is None or len(blk) < len(blocks[best][0]):
                best = i
    return best


def link_equivalence_classes(sigma: SphereSystem) -> LinkClasses:
    """Classes of the relation a ~ b on link(sigma): related when some
    link sphere intersects both.  Transitivity is verified on the
    instance and failure is a hard error; each class is annotated with
    the complementary region it fills and that region's factor.
    """
    c = sigma.complex
    s = c.meta.get("s")
    if c.meta.get("model") != "genus-zero" or s is None:
        raise ValueError("link_equivalence_classes needs the genus-zero model")
    lk = link_of(c, sigma.members)
    verts = list(lk.vertices)
    n = len(verts)
    if n == 0:
        return LinkClasses(())

    # a ~ b  iff  some c in the link is non-adjacent to both (c = a or
    # c = b is allowed; adjacency is irreflexive, so the relation is
    # reflexive by taking c = a)
    nonadj = []
    full = (1 << n) - 1
    for i, v in enumerate(verts):
        nonadj.append(full & ~lk.adjacency_mask(v) & ~(1 << i))
    related = [0] * n
    for i in range(n):
        for j in range(i, n):
            if (nonadj[i] | (1 << i)) & (nonadj[j] | (1 << j)):
                related[i] |= 1 << j
                related[j] |= 1 << i

    # transitivity check: related components must be cliques of ~
    comp = [-1] * n
    comps = 0
    for start in range(n):
        if comp[start] >= 0:
            continue
        stack = [start]
        comp[start] = comps
        while stack:
            i = stack.pop()
            m = related[i]
            for j in range(n):
                if (m >> j) & 1 and comp[j] < 0:
                    comp[j] = comps
                    stack.append(j)
        comps += 1
    for i in range(n):
        for j in range(n):
            if comp[i] == comp[j] and not ((related[i] >> j) & 1):
                raise TransitivityError(
                    "link relation not transitive between %r and %r"
                    % (verts[i], verts[j]))

    blocks, regions = _laminar_regions(sigma, s)
    region_info = {key: (labels, spheres, boundary)
                   for key, labels, spheres, boundary in regions}
    classes = []
    for cid in range(comps):
        members = tuple(sorted(verts[i] for i in range(n) if comp[i] == cid))
        keys = {_region_of_link_vertex(v, blocks) for v in members}
        if len(keys) != 1:
            raise TransitivityError(
                "class %r spans several complementary regions" % (members,))
        labels, spheres, boundary = region_info[keys.pop()]
        classes.append(LinkClass(members, labels, spheres,
                                 ManifoldSignature(0, boundary)))
    classes.sort(key=lambda cl: cl.members)
    return LinkClasses(tuple(classes))


def nonpants_regions(sigma: SphereSystem) -> list[tuple[tuple[int, ...], tuple[str, ...], int]]:
    """The complementary regions of sigma with more than three boundary
    items (the ones that can still contain spheres)."""
    c = sigma.complex
    s = c.meta.get("s")
    if c.meta.get("model") != "genus-zero" or s is None:
        raise ValueError("nonpants_regions needs the genus-zero model")
    _, regions = _laminar_regions(sigma, s)
    return [(labels, spheres, boundary)
            for _, labels, spheres, boundary in regions if boundary >= 4]


@dataclass(frozen=True)
class CaterpillarWitness:
    """A locally injective simplicial map of an interior subcomplex of
    a caterpillar window that no automorphism of the ideal caterpillar
    restricts to: the cited vertex changes type, and ideal automorphisms
    preserve the valence-1 separating / trivalent nonseparating split.
    """

    vertex_map: VertexMap
    moved_vertex: str
    moved_to: str
    from_type: str
    to_type: str
    reason: str


def caterpillar_witness(X_vertices: Iterable[str],
                        window: CaterpillarWindow) -> CaterpillarWitness:
    """Construct a non-extendable map on a connected interior subcomplex
    with at least two vertices.

    Let j be the largest spine index meeting X.  If the leaf w:j lies in
    X it is sent to the spine vertex z:j+1; otherwise the frontier spine
    vertex z:j is sent onto the leaf side, swapping with w:j-1 when that
    leaf is present.  The moved vertex changes type, which certifies
    non-extendability.
    """
    xs = sorted(set(X_vertices))
    c = window.complex
    for v in xs:
        if v not in c:
            raise ValueError("unknown vertex id: %r" % (v,))
        if v in window.frontier:
            raise ValueError("X must avoid the boundary-effect vertices, got %r" % (v,))
    if len(xs) < 2:
        raise ValueError("X needs at least two vertices")
    sub = c.induced(xs)
    if not is_connected(sub):
        raise ValueError("X must be connected")

    spine = [window.spine_index(v) for v in xs if window.is_spine(v)]
    assert spine, "a connected subcomplex with two vertices meets the spine"
    j = max(spine)
    assignment = {v: v for v in xs}
    if "w:%d" % j in xs:
        moved, target = "w:%d" % j, "z:%d" % (j + 1)
    elif "w:%d" % (j - 1) not in xs:
        moved, target = "z:%d" % j, "w:%d" % (j - 1)
    else:
        # swap the frontier spine vertex with its predecessor's leaf
        moved, target = "z:%d" % j, "w:%d" % (j - 1)
        assignment["w:%d" % (j - 1)] = "z:%d" % j
    assignment[moved] = target
    vm = VertexMap(sub, c, assignment)
    assert vm.is_simplicial() and vm.is_locally_injective()
    from_type = window.types[moved]
    to_type = window.types[target]
    assert from_type != to_type
    reason = ("%s (%s) is sent to %s (%s); automorphisms of the ideal "
              "caterpillar preserve vertex types, so no automorphism "
              "restricts to this map" % (moved, from_type, target, to_type))
    return CaterpillarWitness(vm, moved, target, from_type, to_type, reason)


@dataclass(frozen=True)
class CutLabeling:
    """Boundary labels of the genus-zero complement of a maximal
    nonseparating sphere system: n pairs A_i+/A_i- from the cut spheres
    plus the s original boundary labels, with the source record delta.
    """

    n: int
    s: int
    labels: tuple[str, ...]
    delta: dict[str, tuple[str, int]]

    @classmethod
    def from_signature(cls, n: int, s: int) -> "CutLabeling":
        if n < 1:
            raise ValueError("cut labelings need n >= 1")
        if s < 0:
            raise ValueError("s must be >= 0")
        labels = []
        delta: dict[str, tuple[str, int]] = {}
        for i in range(1, n + 1):
            for sign in "+-":
                lab = "A%d%s" % (i, sign)
                labels.append(lab)
                delta[lab] = ("cut-sphere", i)
        for j in range(1, s + 1):
            lab = "B%d" % j
            labels.append(lab)
            delta[lab] = ("boundary", j)
        return cls(n, s, tuple(labels), delta)

    def pair_labels(self, i: int) -> tuple[str, str]:
        if not 1 <= i <= self.n:
            raise ValueError("pair index out of range")
        return ("A%d+" % i, "A%d-" % i)


@dataclass(frozen=True)
class GoodPairCensus:
    pair_index: int
    spare_labels: tuple[str, ...]
    good_spheres: tuple[tuple[str, str], ...]
    good_pairs: tuple[tuple[tuple[str, str], tuple[str, str]], ...]
    nonempty: bool
    threshold_met: bool  # 2n + s >= 6


def good_pair_census(cut: CutLabeling, pair_index: int) -> GoodPairCensus:
    """Enumerate good spheres and good pairs for one cut-sphere pair.

    A good sphere for A_i groups one spare label with A_i- and another
    with A_i+, so it is an ordered pair (p, q) of distinct labels drawn
    from the 2n + s - 2 labels other than A_i+/A_i-.  A good pair is two
    good spheres using four distinct labels.  Nonempty exactly when
    2n + s >= 6.
    """
    a_plus, a_minus = cut.pair_labels(pair_index)
    spare = tuple(l for l in cut.labels if l not in (a_plus, a_minus))
    spheres = tuple((p, q) for p in spare for q in spare if p != q)
    pairs = []
    for g1, g2 in combinations(spheres, 2):
        if not set(g1) & set(g2):
            pairs.append((g1, g2))
    nonempty = bool(pairs)
    return GoodPairCensus(pair_index, spare, spheres, tuple(pairs),
                          nonempty, 2 * cut.n + cut.s >= 6)
