"""Vertex-facet incidence polytopes and illumination combinatorics.

A polytope is carried purely combinatorially: a dimension d, an ordered
list of vertex labels, and the list of facets as vertex subsets.  All
face-level questions (edges, inner diagonals, illumination, stacking) are
answered from incidences alone; geometric agreement is a theorem that the
realization tests check, never an assumption made here.

An inner diagonal is a vertex pair contained in no common facet.  A
polytope is illuminated when every vertex lies on an inner diagonal, and
unneighborly when every vertex misses at least one edge; illumination
implies unneighborliness because an inner diagonal is a missing edge.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import networkx

from .errors import (
    BadParametersError,
    NotAFacetError,
    NotASimplexFacetError,
    TooLargeForBruteForceError,
    UnknownVertexError,
)

DEFAULT_GAMMA_CAP = 14


@dataclass(frozen=True)
class IncidencePolytope:
    """Combinatorial polytope: dimension, ordered vertices, facet subsets.

    Facets are canonicalized on construction: each facet sorted by vertex
    order, the facet list sorted lexicographically by those index tuples.
    Construction enforces that labels are distinct, every vertex lies in at
    least one facet, no facet contains every vertex, and facets are pairwise
    inclusion-incomparable.
    """

    d: int
    vertices: tuple[str, ...]
    facets: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        if self.d < 1:
            raise BadParametersError("dimension must be at least 1")
        if len(set(self.vertices)) != len(self.vertices):
            raise BadParametersError("vertex labels must be distinct")
        if any(not v for v in self.vertices):
            raise BadParametersError("vertex labels must be nonempty")
        order = {v: i for i, v in enumerate(self.vertices)}
        seen = []
        for facet in self.facets:
            missing = [v for v in facet if v not in order]
            if missing:
                raise UnknownVertexError(f"facet uses unknown vertices {missing}")
            if len(set(facet)) != len(facet):
                raise BadParametersError("facet repeats a vertex")
            if len(facet) == len(self.vertices):
                raise BadParametersError("a facet cannot contain every vertex")
            if not facet:
                raise BadParametersError("a facet cannot be empty")
            seen.append(frozenset(facet))
        for a, b in itertools.combinations(seen, 2):
            if a <= b or b <= a:
                raise BadParametersError("facets must be pairwise incomparable")
        covered = set().union(*seen) if seen else set()
        lonely = [v for v in self.vertices if v not in covered]
        if lonely:
            raise BadParametersError(f"vertices on no facet: {lonely}")
        canon = sorted(
            (tuple(sorted(f, key=order.__getitem__)) for f in self.facets),
            key=lambda f: tuple(order[v] for v in f),
        )
        object.__setattr__(self, "facets", tuple(canon))

    @property
    def f0(self) -> int:
        return len(self.vertices)

    def vertex_index(self, label: str) -> int:
        try:
            return self.vertices.index(label)
        except ValueError:
            raise UnknownVertexError(f"no vertex labeled {label!r}") from None

    def facets_containing(self, label: str) -> tuple[tuple[str, ...], ...]:
        self.vertex_index(label)
        return tuple(f for f in self.facets if label in f)

    def is_simplicial(self) -> bool:
        return all(len(f) == self.d for f in self.facets)


def is_edge(poly: IncidencePolytope, u: str, v: str) -> bool:
    """Is {u, v} the exact intersection of the facets containing both?

    Pairs sharing no facet are never edges (for d >= 2 every edge lies in a
    facet; for d = 1 the improper segment does not count as an edge).
    """
    iu, iv = poly.vertex_index(u), poly.vertex_index(v)
    if iu == iv:
        raise BadParametersError("an edge needs two distinct vertices")
    common = [set(f) for f in poly.facets if u in f and v in f]
    if not common:
        return False
    inter = set.intersection(*common)
    return inter == {u, v}


def inner_diagonals(poly: IncidencePolytope) -> tuple[tuple[str, str], ...]:
    """All vertex pairs lying in no common facet, in vertex order."""
    out = []
    for i, j in itertools.combinations(range(poly.f0), 2):
        u, v = poly.vertices[i], poly.vertices[j]
        if not any(u in f and v in f for f in poly.facets):
            out.append((u, v))
    return tuple(out)


def missing_edges(poly: IncidencePolytope) -> tuple[tuple[str, str], ...]:
    """All vertex pairs that are not edges, in vertex order."""
    out = []
    for i, j in itertools.combinations(range(poly.f0), 2):
        u, v = poly.vertices[i], poly.vertices[j]
        if not is_edge(poly, u, v):
            out.append((u, v))
    return tuple(out)


@dataclass(frozen=True)
class IlluminationReport:
    """Per-vertex diagonal and missing-edge partners, plus both verdicts.

    ``diagonal_partner[v]`` is the first vertex (in vertex order) forming an
    inner diagonal with v, or None; likewise ``missing_edge_partner``.  The
    polytope is illuminated when every vertex has a diagonal partner and
    unneighborly when every vertex has a missing-edge partner.
    """

    illuminated: bool
    unneighborly: bool
    diagonal_partner: tuple[tuple[str, str | None], ...]
    missing_edge_partner: tuple[tuple[str, str | None], ...]


def illumination_report(poly: IncidencePolytope) -> IlluminationReport:
    diagonals = set(inner_diagonals(poly))
    diag_partner = []
    edge_partner = []
    for v in poly.vertices:
        dp = next(
            (
                w
                for w in poly.vertices
                if w != v and ((v, w) in diagonals or (w, v) in diagonals)
            ),
            None,
        )
        ep = next(
            (w for w in poly.vertices if w != v and not is_edge(poly, v, w)), None
        )
        diag_partner.append((v, dp))
        edge_partner.append((v, ep))
    illuminated = all(dp is not None for _, dp in diag_partner)
    unneighborly = all(ep is not None for _, ep in edge_partner)
    if illuminated:
        assert unneighborly, "an inner diagonal is in particular a missing edge"
    return IlluminationReport(
        illuminated, unneighborly, tuple(diag_partner), tuple(edge_partner)
    )


def stack_simplex_facet(
    poly: IncidencePolytope, facet: Iterable[str], new_label: str | None = None
) -> IncidencePolytope:
    """Replace a simplex facet F by the d facets (F minus one vertex) + apex.

    The apex label defaults to the first unused ``z0``, ``z1``, ...  The
    apex shares no facet with any vertex off F, so its inner diagonals are
    exactly the pairs with those vertices.
    """
    fset = frozenset(facet)
    order = {v: i for i, v in enumerate(poly.vertices)}
    for v in fset:
        if v not in order:
            raise UnknownVertexError(f"no vertex labeled {v!r}")
    if fset not in {frozenset(f) for f in poly.facets}:
        raise NotAFacetError(f"{sorted(fset)} is not a facet")
    if len(fset) != poly.d:
        raise NotASimplexFacetError(
            f"facet has {len(fset)} vertices; stacking needs exactly d = {poly.d}"
        )
    if new_label is None:
        used = set(poly.vertices)
        i = 0
        while f"z{i}" in used:
            i += 1
        new_label = f"z{i}"
    elif new_label in poly.vertices:
        raise BadParametersError(f"label {new_label!r} already in use")
    kept = [f for f in poly.facets if frozenset(f) != fset]
    sorted_f = sorted(fset, key=order.__getitem__)
    added = [tuple(w for w in sorted_f if w != v) + (new_label,) for v in sorted_f]
    return IncidencePolytope(
        d=poly.d,
        vertices=poly.vertices + (new_label,),
        facets=tuple(kept) + tuple(added),
    )


def crosspolytope(d: int) -> IncidencePolytope:
    """2d vertices +-1 ... +-d; facets pick one sign per coordinate."""
    if d < 1:
        raise BadParametersError("dimension must be at least 1")
    vertices = []
    for i in range(1, d + 1):
        vertices.extend((f"+{i}", f"-{i}"))
    facets = [
        tuple(f"{s}{i}" for i, s in zip(range(1, d + 1), signs))
        for signs in itertools.product("+-", repeat=d)
    ]
    return IncidencePolytope(d=d, vertices=tuple(vertices), facets=tuple(facets))


def simplex(d: int) -> IncidencePolytope:
    """d+1 vertices; every d-subset is a facet."""
    if d < 1:
        raise BadParametersError("dimension must be at least 1")
    vertices = tuple(str(i) for i in range(1, d + 2))
    facets = tuple(itertools.combinations(vertices, d))
    return IncidencePolytope(d=d, vertices=vertices, facets=facets)


def _gale_evenness(subset: Sequence[int], n: int) -> bool:
    """Any two outside elements are separated by evenly many inside elements."""
    inside = set(subset)
    outside = [i for i in range(1, n + 1) if i not in inside]
    prefix = [0] * (n + 2)
    for i in range(1, n + 1):
        prefix[i + 1] = prefix[i] + (1 if i in inside else 0)
    for a, b in itertools.combinations(outside, 2):
        between = prefix[b] - prefix[a + 1]
        if between % 2 != 0:
            return False
    return True


def cyclic_polytope(d: int, n: int) -> IncidencePolytope:
    """Combinatorics of the convex hull of n moment-curve points in R^d.

    Vertices are labeled "1" ... "n" in curve order; facets are the
    d-subsets satisfying the evenness condition: any two vertices outside
    the subset have an even number of subset elements strictly between
    them.  Requires n >= d+1 and d >= 2 (and yields the simplex at n = d+1).
    """
    if d < 2 or n < d + 1:
        raise BadParametersError("cyclic polytope needs d >= 2 and n >= d+1")
    facets = [
        tuple(str(i) for i in subset)
        for subset in itertools.combinations(range(1, n + 1), d)
        if _gale_evenness(subset, n)
    ]
    return IncidencePolytope(
        d=d, vertices=tuple(str(i) for i in range(1, n + 1)), facets=tuple(facets)
    )


@dataclass(frozen=True)
class OppositeSetReport:
    """Largest vertex set lying opposite a single vertex.

    ``value`` is the maximum size of a set W of diagonal partners of some
    vertex v such that the remaining vertices (all but W and v) illuminate
    themselves; ``vertex``/``witness`` realize the maximum.  A
    non-illuminated polytope scores 0 with no witness.
    """

    value: int
    vertex: str | None = None
    witness: tuple[str, ...] = ()


def _illuminates_itself(partners: dict[str, set[str]], vertices: Iterable[str]) -> bool:
    group = set(vertices)
    return all(partners[v] & group for v in group)


def gamma(poly: IncidencePolytope, cap: int = DEFAULT_GAMMA_CAP) -> OppositeSetReport:
    """Brute-force opposite-set maximum over all vertices and partner subsets.

    Exponential in the number of diagonal partners per vertex, so refuses
    polytopes with more than ``cap`` vertices.
    """
    report = illumination_report(poly)
    if not report.illuminated:
        return OppositeSetReport(0)
    if poly.f0 > cap:
        raise TooLargeForBruteForceError(
            f"{poly.f0} vertices exceed the brute-force cap {cap}", cap=cap
        )
    diagonals = inner_diagonals(poly)
    partners: dict[str, set[str]] = {v: set() for v in poly.vertices}
    for u, v in diagonals:
        partners[u].add(v)
        partners[v].add(u)
    best = OppositeSetReport(0)
    all_vertices = set(poly.vertices)
    for v in poly.vertices:
        mine = sorted(partners[v], key=poly.vertex_index)
        for size in range(len(mine), 0, -1):
            if size <= best.value:
                break
            hit = False
            for w_set in itertools.combinations(mine, size):
                rest = all_vertices - set(w_set) - {v}
                if _illuminates_itself(partners, rest):
                    best = OppositeSetReport(size, vertex=v, witness=w_set)
                    hit = True
                    break
            if hit:
                break
    return best


@dataclass(frozen=True)
class MatchingReport:
    """Maximum matching in the inner-diagonal graph.

    ``perfect`` means every vertex is matched; ``pairs`` lists the matched
    diagonals sorted by vertex order.
    """

    perfect: bool
    pairs: tuple[tuple[str, str], ...]


def inner_diagonal_matching(poly: IncidencePolytope) -> MatchingReport:
    graph = networkx.Graph()
    graph.add_nodes_from(poly.vertices)
    graph.add_edges_from(inner_diagonals(poly))
    matching = networkx.max_weight_matching(graph, maxcardinality=True)
    order = poly.vertex_index
    pairs = sorted(
        (tuple(sorted(edge, key=order)) for edge in matching),
        key=lambda e: (order(e[0]), order(e[1])),
    )
    seen: set[str] = set()
    for u, v in pairs:
        assert u not in seen and v not in seen, "matching repeats a vertex"
        seen.update((u, v))
    diagonals = set(inner_diagonals(poly))
    assert all(p in diagonals for p in pairs), "matching uses a non-diagonal"
    return MatchingReport(perfect=2 * len(pairs) == poly.f0, pairs=tuple(pairs))
