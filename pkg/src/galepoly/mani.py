"""Constructions of illuminated polytopes with few vertices.

Two families live here.

* ``mani_simplicial``: a cyclic polytope on d + p vertices stacked on q + 1
  facets whose vertex-complements cover every vertex.  The result is a
  simplicial illuminated d-polytope with nu(d) = d + p + q + 1 vertices,
  where p is the least integer with p(p+1) >= d and q = ceil(d/p).

* ``construct_nonsimplicial_mani``: a Gale-diagram construction.  The
  diagram consists of blocks that are copies of the positive basis
  B = {-(1,...,1), e_1, ..., e_{p-1}} of R^(p-1) or its negative; each
  block is the complement of a simplex facet of the realized polytope Q,
  and stacking a pyramid over each of the q + 1 designated facets yields an
  illuminated polytope P with d + p + q + 1 vertices.  Because the diagram
  contains an opposite pair of vectors, Q (and P) keeps a facet with more
  than d vertices, so P is not simplicial.

``construct_nonsimplicial_mani`` runs in two modes.  ``full`` enumerates
every facet of Q from the diagram and stacks combinatorially; it is the
reference route for small d.  ``certificate`` never enumerates: it realizes
Q exactly, places each apex geometrically, and certifies each required
property (vertexhood, inner diagonals, a fat facet) by its own exact LP or
hyperplane check, which keeps d = 36 tractable.

``spanning_bound_counterexample`` chains the d = 36 certificate build with
dualization: the Gale dual of the resulting 49-vertex polytope is certified
minimal positively 2-spanning with 49 > 2*2*12 vectors in R^12, beating the
classical 2km bound on the size of minimal positively k-spanning
configurations.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import parallel
from .errors import (
    BadParametersError,
    CheckFailedError,
    NoCoverFoundError,
    NoEpsilonFoundError,
    NotAFacetError,
)
from .gale import (
    PointConfiguration,
    all_points_are_vertices,
    barycenter,
    gale_dual,
    incidence_from_gale,
    realize,
    supporting_hyperplane,
)
from .linalg import QQ, dot, vec_add, vec_scale
from .lp import interior_point_test, is_vertex_of_hull, strict_positive_dependence
from .polytope import (
    IncidencePolytope,
    OppositeSetReport,
    cyclic_polytope,
    gamma,
    illumination_report,
    stack_simplex_facet,
)
from .spanning import VectorConfiguration, is_minimal_k_spanning


# ---------------------------------------------------------------------------
# Counting formulas


@dataclass(frozen=True)
class FormulaRow:
    """Vertex-count data for one dimension.

    ``nu`` is the vertex count d + p + q + 1 achieved by both constructions;
    ``M`` = min(2d, nu) is the least number of vertices of an illuminated
    d-polytope (2d from the crosspolytope).
    """

    d: int
    p: int
    q: int
    nu: int
    M: int


def default_block_size(d: int) -> int:
    """Least p >= 1 with p(p+1) >= d; minimizes p + ceil(d/p)."""
    if d < 1:
        raise BadParametersError("dimension must be at least 1")
    p = max(1, (math.isqrt(4 * d + 1) - 1) // 2)
    while p * (p + 1) < d:
        p += 1
    while p > 1 and (p - 1) * p >= d:
        p -= 1
    return p


def _ceil_two_sqrt(d: int) -> int:
    t = math.isqrt(4 * d)
    return t if t * t >= 4 * d else t + 1


def formulas(d: int) -> FormulaRow:
    """p, q, nu, M for dimension d, cross-checked against two closed forms."""
    p = default_block_size(d)
    q = -(-d // p)
    nu = d + p + q + 1
    assert nu == d + 1 + _ceil_two_sqrt(d), "nu disagrees with d + 1 + ceil(2 sqrt d)"
    # ceil((sqrt d + 1)^2) = d + 1 + ceil(2 sqrt d) because d + 1 is an integer
    M = min(2 * d, nu)
    return FormulaRow(d=d, p=p, q=q, nu=nu, M=M)


def formula_table(max_dim: int) -> tuple[tuple[FormulaRow, ...], int | None]:
    """Rows for d = 1..max_dim and the first d with nu(d) < 2d, if any."""
    if max_dim < 1:
        raise BadParametersError("max dimension must be at least 1")
    rows = tuple(formulas(d) for d in range(1, max_dim + 1))
    first = next((r.d for r in rows if r.nu < 2 * r.d), None)
    return rows, first


# ---------------------------------------------------------------------------
# Block Gale diagrams


@dataclass(frozen=True)
class BlockDiagramPlan:
    """A block Gale diagram together with its designated facet complements.

    The configuration has d + p vectors in R^(p-1): ell blocks valued at the
    positive basis B, q - ell blocks valued at -B, and a trailing group that
    completes to d + p vectors.  ``designated`` lists q + 1 named label sets
    of size p, each valued exactly at B or -B, so each is the complement of
    a simplex facet of the realized polytope.
    """

    d: int
    p: int
    q: int
    ell: int
    config: VectorConfiguration
    designated: tuple[tuple[str, tuple[str, ...]], ...]


def _basis_block(p: int, negate: bool) -> list[tuple[Fraction, ...]]:
    sign = QQ(-1) if negate else QQ(1)
    allones = tuple(-sign for _ in range(p - 1))
    vectors = [allones]
    for j in range(p - 1):
        vectors.append(tuple(sign if i == j else QQ(0) for i in range(p - 1)))
    return vectors


def build_block_diagram(d: int, p: int | None = None, ell: int = 1) -> BlockDiagramPlan:
    """Assemble the block diagram for dimension d with block size p.

    Block size defaults to the optimal one, bumped to 3 when that is
    smaller: with p = 2 the blocks are opposite pairs themselves and the
    fat-facet witness collapses, so the construction needs p >= 3.  ``ell``
    counts the positive blocks and must leave at least one negative block.
    """
    if d < 6:
        raise BadParametersError("the block construction needs d >= 6")
    if p is None:
        p = max(3, default_block_size(d))
    if p < 3:
        raise BadParametersError(f"block size p = {p} is too small; need p >= 3")
    q = -(-d // p)
    if q < 2:
        raise BadParametersError(
            f"block size p = {p} leaves fewer than two blocks for d = {d}"
        )
    remainder = d + p - p * q
    if not 1 <= ell <= q - 1:
        raise BadParametersError(f"ell must lie in [1, {q - 1}] for d = {d}, p = {p}")
    pos = _basis_block(p, negate=False)
    neg = _basis_block(p, negate=True)
    pairs: list[tuple[str, tuple[Fraction, ...]]] = []
    designated: list[tuple[str, tuple[str, ...]]] = []
    for i in range(1, ell + 1):
        labels = tuple(f"B{i}.{j}" for j in range(p))
        pairs.extend(zip(labels, pos))
        designated.append((f"B{i}", labels))
    for i in range(1, q - ell + 1):
        labels = tuple(f"T{i}.{j}" for j in range(p))
        pairs.extend(zip(labels, neg))
        designated.append((f"T{i}", labels))
    trailing = tuple(f"C.{j}" for j in range(remainder))
    pairs.extend(zip(trailing, neg[:remainder]))
    borrowed = tuple(f"T1.{j}" for j in range(remainder, p))
    designated.append(("Bprime", trailing + borrowed))
    config = VectorConfiguration.from_pairs(p - 1, pairs)
    assert len(config) == d + p
    for _, labels in designated:
        assert len(labels) == p
        values = sorted(config.coords[config.index_of(lab)] for lab in labels)
        assert values == sorted(pos) or values == sorted(neg), (
            "designated complement is not a positive basis block"
        )
    return BlockDiagramPlan(
        d=d, p=p, q=q, ell=ell, config=config, designated=tuple(designated)
    )


# ---------------------------------------------------------------------------
# Geometric stacking


@dataclass(frozen=True)
class StackCertificate:
    """Everything needed to re-check one apex placement by arithmetic.

    The facet's supporting hyperplane is <normal, x> = offset with all other
    points strictly below; the apex sits at barycenter + epsilon * normal.
    """

    facet: tuple[str, ...]
    apex_label: str
    apex: tuple[Fraction, ...]
    normal: tuple[Fraction, ...]
    offset: Fraction
    epsilon: Fraction
    trials: int


def _vertex_task(args):
    coords, i = args
    return is_vertex_of_hull(coords, i)


def _midpoint_task(args):
    coords, i, j = args
    mid = vec_scale(QQ(1, 2), vec_add(coords[i], coords[j]))
    ok, _ = interior_point_test(coords, mid)
    return ok


def _all_vertices(coords, workers: int) -> bool:
    tasks = ((coords, i) for i in range(len(coords)))
    return all(parallel.imap(_vertex_task, tasks, workers))


def geometric_stack_point(
    points: PointConfiguration,
    facet_labels,
    hyperplane=None,
    guard_planes=(),
    new_label: str | None = None,
    max_halvings: int = 60,
    workers: int = 1,
) -> tuple[PointConfiguration, StackCertificate]:
    """Place an apex just beyond a simplex facet and certify the placement.

    The apex starts at barycenter + normal and halves its height until
    (a) it stays strictly beneath every guard hyperplane, (b) every previous
    point remains a vertex of the enlarged hull, and (c) the midpoint of the
    segment from the apex to each point off the facet lies in the interior
    of the enlarged hull (so those segments are inner diagonals).  Being
    beyond the facet's own hyperplane holds for every positive height.
    """
    facet = tuple(facet_labels)
    if hyperplane is None:
        hyperplane = supporting_hyperplane(points, facet)
        if hyperplane is None:
            raise NotAFacetError(f"{sorted(facet)} has no supporting hyperplane")
    normal, offset = hyperplane
    fset = set(facet)
    facet_coords = [points.coords[i] for i, lab in enumerate(points.labels) if lab in fset]
    off_facet = [i for i, lab in enumerate(points.labels) if lab not in fset]
    center = barycenter(facet_coords)
    if new_label is None:
        used = set(points.labels)
        j = 0
        while f"z{j}" in used:
            j += 1
        new_label = f"z{j}"
    elif new_label in points.labels:
        raise BadParametersError(f"label {new_label!r} already in use")

    eps = QQ(1)
    for trial in range(1, max_halvings + 1):
        apex = vec_add(center, vec_scale(eps, normal))
        assert dot(normal, apex) > offset
        if all(dot(a, apex) < b for a, b in guard_planes):
            coords = points.coords + (apex,)
            n = len(coords)
            vertex_tasks = ((coords, i) for i in range(n - 1))
            if all(parallel.imap(_vertex_task, vertex_tasks, workers)):
                mid_tasks = ((coords, n - 1, i) for i in off_facet)
                if all(parallel.imap(_midpoint_task, mid_tasks, workers)):
                    stacked = PointConfiguration(
                        d=points.d,
                        labels=points.labels + (new_label,),
                        coords=coords,
                    )
                    cert = StackCertificate(
                        facet=facet,
                        apex_label=new_label,
                        apex=apex,
                        normal=normal,
                        offset=offset,
                        epsilon=eps,
                        trials=trial,
                    )
                    return stacked, cert
        eps = eps / 2
    raise NoEpsilonFoundError(
        f"no valid apex height within {max_halvings} halvings for facet {sorted(facet)}"
    )


# ---------------------------------------------------------------------------
# The nonsimplicial construction


@dataclass
class ManiConstruction:
    """Result of the block-diagram construction, either mode.

    ``checks`` maps check names to booleans; a fully successful build has
    every value true.  Full mode fills ``base``/``stacked`` (combinatorial
    polytopes); certificate mode fills ``base_points``/``points`` and
    ``stacks`` plus the fat-facet witness.
    """

    plan: BlockDiagramPlan
    mode: str
    checks: dict[str, bool] = field(default_factory=dict)
    base: IncidencePolytope | None = None
    stacked: IncidencePolytope | None = None
    base_points: PointConfiguration | None = None
    points: PointConfiguration | None = None
    stacks: tuple[StackCertificate, ...] = ()
    fat_facet: tuple[str, ...] | None = None
    fat_facet_plane: tuple[tuple[Fraction, ...], Fraction] | None = None
    diagonal_partner: tuple[tuple[str, str], ...] = ()
    gamma_report: OppositeSetReport | None = None

    @property
    def f0(self) -> int:
        if self.stacked is not None:
            return self.stacked.f0
        return len(self.points) if self.points is not None else 0

    @property
    def is_mani_size(self) -> bool:
        """Whether the vertex count meets the known minimum for dimension d."""
        return self.f0 == formulas(self.plan.d).M

    def all_checks_pass(self) -> bool:
        return bool(self.checks) and all(self.checks.values())

    def raise_on_failure(self) -> None:
        failed = sorted(name for name, ok in self.checks.items() if not ok)
        if failed:
            raise CheckFailedError(failed[0], self)


def _apex_labels(q: int) -> list[str]:
    return [f"S{i}" for i in range(1, q + 2)]


def _designated_facets(plan: BlockDiagramPlan) -> list[tuple[str, ...]]:
    labels = plan.config.labels
    out = []
    for _, comp in plan.designated:
        cset = set(comp)
        out.append(tuple(lab for lab in labels if lab not in cset))
    return out


def _construct_full(plan: BlockDiagramPlan, gamma_cap: int) -> ManiConstruction:
    result = ManiConstruction(plan=plan, mode="full")
    base = incidence_from_gale(plan.config)
    result.base = base
    complements = {frozenset(base.vertices) - frozenset(f) for f in base.facets}
    result.checks["designatedAreFacets"] = all(
        frozenset(comp) in complements for _, comp in plan.designated
    )
    covered = set().union(*(set(c) for _, c in plan.designated))
    result.checks["complementsCoverVertices"] = covered == set(plan.config.labels)
    stacked = base
    facets = _designated_facets(plan)
    for facet, apex in zip(facets, _apex_labels(plan.q)):
        stacked = stack_simplex_facet(stacked, facet, new_label=apex)
    result.stacked = stacked
    report = illumination_report(stacked)
    result.checks["illuminated"] = report.illuminated
    result.checks["unneighborly"] = report.unneighborly
    result.diagonal_partner = tuple(
        (v, w) for v, w in report.diagonal_partner if w is not None
    )
    fat = next((f for f in stacked.facets if len(f) > stacked.d), None)
    result.fat_facet = fat
    result.checks["nonsimplicial"] = fat is not None
    result.checks["f0MatchesFormula"] = stacked.f0 == plan.d + plan.p + plan.q + 1
    if 0 < gamma_cap and stacked.f0 <= gamma_cap:
        result.gamma_report = gamma(stacked, cap=gamma_cap)
    return result


def _construct_certificate(
    plan: BlockDiagramPlan, gamma_cap: int, workers: int
) -> ManiConstruction:
    result = ManiConstruction(plan=plan, mode="certificate")
    config = plan.config
    for _, comp in plan.designated:
        cert = strict_positive_dependence(
            config.coords, [config.index_of(lab) for lab in comp]
        )
        assert cert.kind == "PositiveDependence", "designated complement is not a coface"
    base_points = realize(config)
    result.base_points = base_points
    covered = set().union(*(set(c) for _, c in plan.designated))
    result.checks["complementsCoverVertices"] = covered == set(config.labels)

    facets = _designated_facets(plan)
    planes = []
    for facet in facets:
        hp = supporting_hyperplane(base_points, facet)
        if hp is None:
            raise NotAFacetError(
                "designated complement fails the supporting-hyperplane check"
            )
        planes.append(hp)
    result.checks["designatedAreFacets"] = True

    current = base_points
    stacks = []
    for i, (facet, apex) in enumerate(zip(facets, _apex_labels(plan.q))):
        guards = [planes[j] for j in range(len(planes)) if j != i]
        current, cert = geometric_stack_point(
            current,
            facet,
            hyperplane=planes[i],
            guard_planes=guards,
            new_label=apex,
            workers=workers,
        )
        stacks.append(cert)
    result.points = current
    result.stacks = tuple(stacks)
    result.checks["f0MatchesFormula"] = len(current) == plan.d + plan.p + plan.q + 1

    coords = current.coords
    index = {lab: i for i, lab in enumerate(current.labels)}
    result.checks["allPointsVertices"] = _all_vertices(coords, workers)

    # one certified inner diagonal per vertex: each original label lies in
    # some designated complement and pairs with that facet's apex
    partner: dict[str, str] = {}
    for (name, comp), apex in zip(plan.designated, _apex_labels(plan.q)):
        for lab in comp:
            partner.setdefault(lab, apex)
        partner.setdefault(apex, comp[0])
    pairs = [(lab, partner[lab]) for lab in current.labels]
    tasks = ((coords, index[a], index[b]) for a, b in pairs)
    ok_flags = list(parallel.imap(_midpoint_task, tasks, workers))
    result.checks["illuminated"] = all(ok_flags)
    result.checks["unneighborly"] = all(ok_flags)
    result.diagonal_partner = tuple(pairs)

    # fat facet: drop one opposite pair of diagram vectors; the remaining
    # d + p - 2 > d original points must span a supporting hyperplane
    drop = {"B1.0", plan.designated[-1][1][0]}
    fat = tuple(lab for lab in config.labels if lab not in drop)
    plane = supporting_hyperplane(current, fat)
    result.fat_facet = fat
    result.fat_facet_plane = plane
    result.checks["nonsimplicial"] = plane is not None and len(fat) > plan.d
    return result


def construct_nonsimplicial_mani(
    d: int,
    ell: int = 1,
    p: int | None = None,
    mode: str = "full",
    gamma_cap: int = 0,
    workers: int = 1,
    strict: bool = True,
) -> ManiConstruction:
    """Build and check the stacked block-diagram polytope for dimension d.

    ``full`` mode enumerates all facets of the realized base polytope and
    stacks combinatorially; ``certificate`` mode realizes coordinates and
    certifies each property by exact LPs without any facet enumeration.
    With ``strict`` (the default) a failed check raises; pass False to get
    the result object back for inspection instead.
    """
    plan = build_block_diagram(d, p=p, ell=ell)
    if mode == "full":
        result = _construct_full(plan, gamma_cap)
    elif mode == "certificate":
        result = _construct_certificate(plan, gamma_cap, workers)
    else:
        raise BadParametersError(f"unknown mode {mode!r}")
    if strict:
        result.raise_on_failure()
    return result


# ---------------------------------------------------------------------------
# The simplicial construction


@dataclass
class SimplicialConstruction:
    """Cyclic polytope stacked over a covering family of facet complements."""

    d: int
    p: int
    q: int
    base: IncidencePolytope
    stacked: IncidencePolytope
    cover: tuple[tuple[str, ...], ...]
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def f0(self) -> int:
        return self.stacked.f0

    @property
    def is_mani_size(self) -> bool:
        """Whether the vertex count meets the known minimum for dimension d."""
        return self.stacked.f0 == formulas(self.d).M

    def all_checks_pass(self) -> bool:
        return bool(self.checks) and all(self.checks.values())


def _find_cover(
    candidates: list[tuple[int, ...]], universe: set[int], limit: int, set_size: int
) -> list[int] | None:
    """First (in lexicographic branch order) cover of the universe by at
    most ``limit`` candidate sets, chosen by always branching on the least
    uncovered element."""

    def recurse(uncovered: set[int], chosen: list[int]) -> list[int] | None:
        if not uncovered:
            return chosen
        slots = limit - len(chosen)
        if slots * set_size < len(uncovered):
            return None
        e = min(uncovered)
        for idx, cand in enumerate(candidates):
            if e in cand:
                got = recurse(uncovered - set(cand), chosen + [idx])
                if got is not None:
                    return got
        return None

    return recurse(universe, [])


def mani_simplicial(d: int) -> SimplicialConstruction:
    """Simplicial illuminated d-polytope with d + p + q + 1 vertices."""
    if d < 3:
        raise BadParametersError("the stacked cyclic construction needs d >= 3")
    row = formulas(d)
    p, q = row.p, row.q
    n = d + p
    base = cyclic_polytope(d, n)
    assert base.is_simplicial()
    all_idx = set(range(1, n + 1))
    complements = [
        tuple(sorted(all_idx - {int(v) for v in facet})) for facet in base.facets
    ]
    cover_idx = _find_cover(complements, all_idx, q + 1, p)
    if cover_idx is None:
        raise NoCoverFoundError(
            f"no {q + 1} facet complements cover all {n} vertices for d = {d}"
        )
    cover = tuple(tuple(str(i) for i in complements[c]) for c in cover_idx)
    stacked = base
    for comp, apex in zip(cover, _apex_labels(q)):
        facet = tuple(lab for lab in base.vertices if lab not in set(comp))
        stacked = stack_simplex_facet(stacked, facet, new_label=apex)
    result = SimplicialConstruction(
        d=d, p=p, q=q, base=base, stacked=stacked, cover=cover
    )
    covered = set().union(*(set(c) for c in cover))
    result.checks["complementsCoverVertices"] = covered == set(base.vertices)
    result.checks["simplicial"] = stacked.is_simplicial()
    report = illumination_report(stacked)
    result.checks["illuminated"] = report.illuminated
    result.checks["unneighborly"] = report.unneighborly
    result.checks["f0MatchesFormula"] = stacked.f0 == row.nu
    return result


# ---------------------------------------------------------------------------
# The 2km bound counterexample


@dataclass
class CounterexampleReport:
    """Certified minimal positively 2-spanning configuration beating 2km.

    The configuration is the Gale dual of the d = 36 certificate-mode build:
    49 vectors in R^12, exceeding the classical bound 2*k*m = 48.
    """

    construction: ManiConstruction
    dual: VectorConfiguration
    k: int
    classical_bound: int
    spanning: bool
    minimal: bool
    exceeds_bound: bool
    per_index: tuple[tuple[str, tuple[str, ...], str], ...] = ()

    def verdict(self) -> bool:
        return (
            self.construction.all_checks_pass()
            and self.spanning
            and self.minimal
            and self.exceeds_bound
        )


def dual_spanning_report(
    construction: ManiConstruction, k: int = 2, workers: int = 1
) -> CounterexampleReport:
    """Dualize a certificate-mode construction and test minimal k-spanning."""
    if construction.points is None:
        raise BadParametersError("dual stage needs a certificate-mode construction")
    dual = gale_dual(construction.points)
    base, minimality = is_minimal_k_spanning(dual, k, workers=workers)
    return CounterexampleReport(
        construction=construction,
        dual=dual,
        k=k,
        classical_bound=2 * k * dual.m,
        spanning=base.spanning,
        minimal=minimality.minimal,
        exceeds_bound=len(dual) > 2 * k * dual.m,
        per_index=minimality.per_index,
    )


def spanning_bound_counterexample(workers: int = 1) -> CounterexampleReport:
    """Build the d = 36 polytope and certify its dual past the 2km bound."""
    construction = construct_nonsimplicial_mani(
        36, ell=1, mode="certificate", workers=workers, strict=False
    )
    return dual_spanning_report(construction, k=2, workers=workers)
