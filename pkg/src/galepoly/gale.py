"""Gale duality: cofaces, facet enumeration, dualization, realization.

A configuration of n vectors in R^m is read as the Gale diagram of a
polytope with n vertices in dimension d = n - m - 1.  A subset S of vectors
is a coface when 0 lies in the relative interior of conv(S), equivalently
when S carries a strictly positive dependence; the faces of the polytope
are exactly the complements of cofaces, and facets are the complements of
the inclusion-minimal ones.

``gale_dual`` maps labeled points to such a configuration (kernel of the
lifted coordinate matrix) and ``realize`` inverts it for positively
2-spanning configurations.  Outputs are unique only up to a linear change
of coordinates; downstream consumers rely on coface structure alone, which
both directions preserve exactly (and which the tests re-derive on both
sides).  ``supporting_hyperplane`` and ``verify_facets_geometrically``
cross-check claimed combinatorics against exact convex geometry.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    BadParametersError,
    DegenerateInputError,
    DimensionMismatchError,
    NotTwoSpanningError,
)
from .linalg import QQ, ExactMatrix, as_vector, dot, is_zero_vector, primitive, vec_sum
from .lp import (
    KIND_POSITIVE_DEPENDENCE,
    DependenceCertificate,
    is_vertex_of_hull,
    strict_positive_dependence,
)
from .spanning import VectorConfiguration, is_positively_k_spanning


@dataclass(frozen=True)
class PointConfiguration:
    """Ordered labeled points in R^d."""

    d: int
    labels: tuple[str, ...]
    coords: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.d < 0:
            raise BadParametersError("dimension must be nonnegative")
        if len(self.labels) != len(self.coords):
            raise DimensionMismatchError("labels and coordinates differ in length")
        if len(set(self.labels)) != len(self.labels):
            raise BadParametersError("labels must be distinct")
        if any(not lab for lab in self.labels):
            raise BadParametersError("labels must be nonempty")
        if any(len(p) != self.d for p in self.coords):
            raise DimensionMismatchError("point length differs from ambient dimension")

    @classmethod
    def from_pairs(cls, d: int, pairs: Iterable[tuple[str, Sequence]]) -> "PointConfiguration":
        labels = []
        coords = []
        for lab, p in pairs:
            labels.append(str(lab))
            coords.append(as_vector(p))
        return cls(d=d, labels=tuple(labels), coords=tuple(coords))

    def __len__(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class CofaceReport:
    subset: tuple[int, ...]
    is_coface: bool
    certificate: DependenceCertificate


def is_coface(config: VectorConfiguration, subset: Iterable[int]) -> CofaceReport:
    """Does 0 lie in the relative interior of the convex hull of the subset?

    Decided by the strict-positive-dependence test; in ambient dimension 0
    every nonempty subset qualifies (the hull is the single point 0).
    """
    idx = tuple(sorted(set(subset)))
    cert = strict_positive_dependence(config.coords, idx)
    return CofaceReport(idx, cert.kind == KIND_POSITIVE_DEPENDENCE, cert)


def enumerate_facet_complements(config: VectorConfiguration) -> list[tuple[int, ...]]:
    """All inclusion-minimal cofaces, in size-then-lexicographic order.

    A minimal coface carries a one-dimensional space of dependencies, so its
    size is at most m+1; enumeration stops at that size and skips supersets
    of cofaces already found, which preserves exactly the minimal ones.
    """
    n = len(config)
    m = config.m
    found: list[tuple[int, ...]] = []
    found_sets: list[frozenset[int]] = []
    for size in range(1, min(n, m + 1) + 1):
        for subset in itertools.combinations(range(n), size):
            s = frozenset(subset)
            if any(f <= s for f in found_sets):
                continue
            if is_coface(config, subset).is_coface:
                found.append(subset)
                found_sets.append(s)
    for f in found:
        assert len(f) <= m + 1, "minimal coface exceeds the size bound"
    return found


def gale_dual(points: PointConfiguration) -> VectorConfiguration:
    """Kernel-basis rows of the lifted point matrix, one vector per point.

    The lift prepends a homogenizing 1 to each point; the points must
    affinely span R^d, i.e. the lifted matrix must have rank d+1.  The
    result lives in R^(n-d-1) and carries the input labels in order; a
    simplex (n = d+1) yields the empty-dimension configuration.
    """
    n = len(points)
    d = points.d
    if n < d + 1:
        raise DegenerateInputError(f"{n} points cannot affinely span dimension {d}")
    lifted_t = ExactMatrix(
        [[QQ(1)] * n] + [[points.coords[j][i] for j in range(n)] for i in range(d)],
        cols=n,
    )
    if lifted_t.rank() != d + 1:
        raise DegenerateInputError("points do not affinely span the ambient space")
    kernel = lifted_t.kernel_basis()
    m = n - d - 1
    return VectorConfiguration(
        m=m,
        labels=points.labels,
        coords=tuple(kernel.row(i) for i in range(n)),
    )


def _reject_zero_vectors(config: VectorConfiguration) -> None:
    """Zero vectors are cofaces all by themselves and degenerate the dual.

    A configuration may pass the 2-spanning test despite a zero member, but
    the realized polytope then hides one point inside a face of all the
    others, so the face-lattice invariants this module promises break down.
    """
    for lab, v in config.pairs():
        if is_zero_vector(v):
            raise NotTwoSpanningError(
                f"vector {lab!r} is zero: its singleton coface degenerates the dual"
            )


def realize(config: VectorConfiguration) -> PointConfiguration:
    """Points whose Gale dual has exactly the cofaces of the configuration.

    Requires positive 2-spanning (so that every point of the result is a
    vertex of its hull).  A strictly positive dependence lambda is extended
    to a kernel basis of the configuration matrix with lambda as its first
    member; scaling row i by 1/lambda_i makes the first coordinate constant,
    and the remaining n-m-1 coordinates are the points.
    """
    _reject_zero_vectors(config)
    report = is_positively_k_spanning(config, 2)
    if not report.spanning:
        raise NotTwoSpanningError(
            "realize requires a positively 2-spanning configuration", report
        )
    n = len(config)
    m = config.m
    cert = strict_positive_dependence(config.coords, range(n))
    assert cert.kind == KIND_POSITIVE_DEPENDENCE
    lam = cert.lam
    mat_t = ExactMatrix(
        [[config.coords[j][i] for j in range(n)] for i in range(m)], cols=n
    )
    kernel = mat_t.kernel_basis()
    coeff = kernel.solve(lam)
    assert coeff is not None, "a positive dependence lies in the kernel"
    j_star = next(j for j in range(kernel.cols) if coeff[j] != 0)
    columns = [lam] + [kernel.column(j) for j in range(kernel.cols) if j != j_star]
    d = n - m - 1
    coords = tuple(
        tuple(columns[t][i] / lam[i] for t in range(1, d + 1)) for i in range(n)
    )
    return PointConfiguration(d=d, labels=config.labels, coords=coords)


def incidence_from_gale(config: VectorConfiguration) -> "IncidencePolytope":
    """Polytope whose facets are the complements of the minimal cofaces.

    Requires positive 2-spanning, which guarantees that every label is a
    vertex and that the complement family is a valid facet list.
    """
    from .polytope import IncidencePolytope

    _reject_zero_vectors(config)
    report = is_positively_k_spanning(config, 2)
    if not report.spanning:
        raise NotTwoSpanningError(
            "incidence extraction requires a positively 2-spanning configuration",
            report,
        )
    n = len(config)
    complements = enumerate_facet_complements(config)
    facets = tuple(
        tuple(config.labels[i] for i in range(n) if i not in set(coface))
        for coface in complements
    )
    return IncidencePolytope(d=n - config.m - 1, vertices=config.labels, facets=facets)


def supporting_hyperplane(
    points: PointConfiguration, subset_labels: Iterable[str]
) -> tuple[tuple[Fraction, ...], Fraction] | None:
    """Exact hyperplane through the subset with all other points strictly beneath.

    Returns a primitive integer normal a and offset beta with <a, p> = beta
    on the subset and <a, p> < beta off it, or None when the subset is not
    the full vertex set of a supporting hyperplane (wrong affine dimension,
    an outside point on the hyperplane, or points on both sides).
    """
    labels = set(subset_labels)
    unknown = labels - set(points.labels)
    if unknown:
        raise BadParametersError(f"labels not in configuration: {sorted(unknown)}")
    inside = [i for i, lab in enumerate(points.labels) if lab in labels]
    outside = [i for i in range(len(points)) if points.labels[i] not in labels]
    if not inside or not outside:
        return None
    system = ExactMatrix(
        [list(points.coords[i]) + [QQ(-1)] for i in inside], cols=points.d + 1
    )
    kernel = system.kernel_basis()
    if kernel.cols != 1:
        return None
    vec = primitive(kernel.column(0))
    a, beta = vec[:-1], vec[-1]
    values = [dot(a, points.coords[i]) - beta for i in outside]
    if all(v < 0 for v in values):
        return a, beta
    if all(v > 0 for v in values):
        return tuple(-x for x in a), -beta
    return None


def verify_facets_geometrically(
    points: PointConfiguration, facets: Sequence[Sequence[str]]
) -> bool:
    """Each claimed facet supports the points; no facet plus an extra point does."""
    for facet in facets:
        if supporting_hyperplane(points, facet) is None:
            return False
        members = set(facet)
        for lab in points.labels:
            if lab not in members:
                if supporting_hyperplane(points, list(members | {lab})) is not None:
                    return False
    return True


def all_points_are_vertices(points: PointConfiguration) -> bool:
    """Every point lies outside the hull of the others (exact LP per point)."""
    return all(is_vertex_of_hull(points.coords, i) for i in range(len(points)))


def barycenter(points: Sequence[Sequence[Fraction]]) -> tuple[Fraction, ...]:
    pts = [as_vector(p) for p in points]
    if not pts:
        raise BadParametersError("barycenter of no points")
    n = QQ(len(pts))
    return tuple(c / n for c in vec_sum(pts, len(pts[0])))
