"""Exact feasibility LP and positive-dependence certificates.

The single solver here answers one question in exact rational arithmetic:
does ``sum_j x_j * columns[j] = b`` admit a solution with every ``x_j >= 0``?
It runs a phase-1 simplex over Fraction with Bland's least-index rule, so it
terminates on every input and returns either a feasible point or a Farkas
vector ``y`` with ``y . columns[j] <= 0`` for all j and ``y . b > 0``.

Everything else is a thin layer over that kernel:

* ``strict_positive_dependence`` decides whether a selection of vectors
  admits a dependence with all coefficients strictly positive, which by the
  Stiemke alternative fails exactly when some linear functional is
  nonnegative on the selection and positive somewhere on it;
* ``positively_spans`` combines a rank check with the dependence test;
* ``interior_point_test`` translates points and reuses the spanning test;
* ``is_vertex_of_hull`` is the convex-combination membership test.

Every certificate returned by this module has been re-verified by direct
arithmetic (``verify_certificate``) before it leaves the producing function,
so downstream code may treat certificates as ground truth.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import BadParametersError, DimensionMismatchError, EmptySelectionError
from .linalg import (
    QQ,
    ExactMatrix,
    as_vector,
    dot,
    is_zero_vector,
    vec_sub,
    vec_sum,
    zero_vector,
)

KIND_POSITIVE_DEPENDENCE = "PositiveDependence"
KIND_STIEMKE_WITNESS = "StiemkeWitness"
KIND_RANK_DEFICIENCY = "RankDeficiency"


@dataclass(frozen=True)
class DependenceCertificate:
    """Outcome of a spanning or dependence test, checkable by arithmetic.

    Exactly one payload field is populated, matching ``kind``:

    * ``PositiveDependence``: ``lam`` has one entry per selected vector, every
      entry >= 1, and the weighted sum of the selection is zero.
    * ``StiemkeWitness``: ``functional`` is nonnegative on every selected
      vector and strictly positive on at least one.
    * ``RankDeficiency``: ``direction`` is a nonzero vector orthogonal to
      every selected vector.
    """

    kind: str
    lam: tuple[Fraction, ...] | None = None
    functional: tuple[Fraction, ...] | None = None
    direction: tuple[Fraction, ...] | None = None


def solve_feasibility(
    columns: Sequence[Sequence[Fraction]], b: Sequence[Fraction]
) -> tuple[tuple[Fraction, ...] | None, tuple[Fraction, ...] | None]:
    """Find x >= 0 with sum_j x_j columns[j] = b, else a Farkas certificate.

    Returns ``(x, None)`` on feasibility and ``(None, y)`` otherwise, where
    ``y . columns[j] <= 0`` for every j and ``y . b > 0``.  Phase-1 simplex
    with Bland's rule: the entering column is the least index with positive
    reduced cost, and ratio-test ties leave the row whose basic variable has
    the least index.
    """
    b = as_vector(b)
    m = len(b)
    cols = [as_vector(c) for c in columns]
    n = len(cols)
    for c in cols:
        if len(c) != m:
            raise DimensionMismatchError("column length does not match rhs length")
    if m == 0:
        return zero_vector(n), None

    signs = [QQ(-1) if bi < 0 else QQ(1) for bi in b]
    tab = [
        [signs[i] * cols[j][i] for j in range(n)]
        + [QQ(1) if k == i else QQ(0) for k in range(m)]
        for i in range(m)
    ]
    rhs = [signs[i] * b[i] for i in range(m)]
    basis = list(range(n, n + m))
    # reduced costs for minimizing the sum of artificials; z[j] > 0 improves
    z = [sum((tab[i][j] for i in range(m)), start=QQ(0)) for j in range(n)] + [QQ(0)] * m
    value = sum(rhs, start=QQ(0))

    total = n + m
    while True:
        enter = None
        for j in range(total):
            if z[j] > 0:
                enter = j
                break
        if enter is None:
            break
        leave = None
        best_ratio = None
        best_basic = None
        for i in range(m):
            t = tab[i][enter]
            if t > 0:
                ratio = rhs[i] / t
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < best_basic)
                ):
                    best_ratio, best_basic, leave = ratio, basis[i], i
        if leave is None:
            raise AssertionError("phase-1 objective is bounded; no unbounded ray exists")
        pv = tab[leave][enter]
        tab[leave] = [x / pv for x in tab[leave]]
        rhs[leave] = rhs[leave] / pv
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[leave])]
                rhs[i] = rhs[i] - f * rhs[leave]
        f = z[enter]
        z = [x - f * y for x, y in zip(z, tab[leave])]
        value = value - f * rhs[leave]
        basis[leave] = enter

    if value == 0:
        x = [QQ(0)] * n
        for i, bv in enumerate(basis):
            if bv < n:
                x[bv] = rhs[i]
        assert vec_sum(
            ([xi * cj for cj in col] for xi, col in zip(x, cols)), m
        ) == tuple(b), "feasible point fails to reproduce the rhs"
        return tuple(x), None

    # value = min sum of artificials > 0; read the dual from the z-row
    y = tuple(signs[i] * (z[n + i] + 1) for i in range(m))
    assert dot(y, b) > 0, "Farkas vector must have positive value on b"
    for c in cols:
        assert dot(y, c) <= 0, "Farkas vector must be nonpositive on every column"
    return None, y


def nonneg_combination(
    columns: Sequence[Sequence[Fraction]], target: Sequence[Fraction]
) -> tuple[Fraction, ...] | None:
    """Coefficients x >= 0 writing target as a nonnegative combination, or None."""
    x, _ = solve_feasibility(columns, target)
    return x


def _selected(coords: Sequence[Sequence[Fraction]], selection) -> tuple[tuple[int, ...], list]:
    if selection is None:
        selection = range(len(coords))
    idx = tuple(sorted(set(selection)))
    if not idx:
        raise EmptySelectionError("selection of vectors is empty")
    n = len(coords)
    for i in idx:
        if not 0 <= i < n:
            raise BadParametersError(f"index {i} out of range for {n} vectors")
    return idx, [coords[i] for i in idx]


def strict_positive_dependence(coords: Sequence[Sequence[Fraction]], selection) -> DependenceCertificate:
    """Decide whether the selected vectors admit an all-positive dependence.

    Returns a ``PositiveDependence`` certificate (all weights >= 1) when some
    lambda > 0 has ``sum lambda_i u_i = 0``, else a ``StiemkeWitness``.  The
    substitution lambda = 1 + mu reduces the question to feasibility of
    ``sum mu_i u_i = -(sum u_i)`` with mu >= 0.
    """
    idx, sel = _selected(coords, selection)
    m = len(sel[0])
    target = tuple(-t for t in vec_sum(sel, m))
    x, y = solve_feasibility(sel, target)
    if x is not None:
        cert = DependenceCertificate(
            KIND_POSITIVE_DEPENDENCE, lam=tuple(QQ(1) + xi for xi in x)
        )
    else:
        cert = DependenceCertificate(
            KIND_STIEMKE_WITNESS, functional=tuple(-yi for yi in y)
        )
    assert verify_certificate(coords, idx, cert)
    return cert


def positively_spans(
    coords: Sequence[Sequence[Fraction]], selection
) -> tuple[bool, DependenceCertificate]:
    """Decide whether the selected vectors positively span the ambient space.

    True exactly when the selection has full rank and admits a strict
    positive dependence; the accompanying certificate proves whichever
    verdict is returned and has been re-checked by direct arithmetic.
    """
    idx, sel = _selected(coords, selection)
    m = len(sel[0])
    if m < 1:
        raise BadParametersError("ambient dimension must be at least 1")
    mat = ExactMatrix(sel)
    if mat.rank() < m:
        kernel = mat.kernel_basis()
        cert = DependenceCertificate(KIND_RANK_DEFICIENCY, direction=kernel.column(0))
        assert verify_certificate(coords, idx, cert)
        return False, cert
    cert = strict_positive_dependence(coords, idx)
    return cert.kind == KIND_POSITIVE_DEPENDENCE, cert


def interior_point_test(
    points: Sequence[Sequence[Fraction]], x: Sequence[Fraction]
) -> tuple[bool, DependenceCertificate]:
    """Is x in the interior of the convex hull of the points?

    Equivalent to the translated vectors {p - x} positively spanning the
    ambient space; a Stiemke witness is a separating (supporting) functional
    and a rank deficiency exposes an affine hyperplane through all points.
    """
    x = as_vector(x)
    pts = [as_vector(p) for p in points]
    if not pts:
        raise EmptySelectionError("no points given")
    d = len(x)
    if any(len(p) != d for p in pts):
        raise DimensionMismatchError("point and query dimensions differ")
    if d < 1:
        raise BadParametersError("ambient dimension must be at least 1")
    translated = [vec_sub(p, x) for p in pts]
    return positively_spans(translated, range(len(translated)))


def is_vertex_of_hull(points: Sequence[Sequence[Fraction]], i: int) -> bool:
    """Is points[i] outside the convex hull of the remaining points?

    Membership is the feasibility of a convex combination; an empty remainder
    makes the point trivially a vertex.
    """
    pts = [as_vector(p) for p in points]
    if not 0 <= i < len(pts):
        raise BadParametersError(f"index {i} out of range for {len(pts)} points")
    others = [p for j, p in enumerate(pts) if j != i]
    if not others:
        return True
    d = len(pts[i])
    columns = [(QQ(1),) + p for p in others]
    target = (QQ(1),) + pts[i]
    x, _ = solve_feasibility(columns, target)
    return x is None


def verify_certificate(
    coords: Sequence[Sequence[Fraction]], selection, cert: DependenceCertificate
) -> bool:
    """Re-check a certificate by direct arithmetic; no LP involved."""
    if selection is None:
        selection = range(len(coords))
    idx = tuple(sorted(set(selection)))
    sel = [as_vector(coords[i]) for i in idx]
    if not sel:
        return False
    m = len(sel[0])
    if cert.kind == KIND_POSITIVE_DEPENDENCE:
        lam = cert.lam
        if lam is None or len(lam) != len(sel):
            return False
        if any(l <= 0 for l in lam):
            return False
        total = vec_sum(([l * c for c in v] for l, v in zip(lam, sel)), m)
        return is_zero_vector(total)
    if cert.kind == KIND_STIEMKE_WITNESS:
        c = cert.functional
        if c is None or len(c) != m or is_zero_vector(c):
            return False
        values = [dot(c, v) for v in sel]
        return all(v >= 0 for v in values) and any(v > 0 for v in values)
    if cert.kind == KIND_RANK_DEFICIENCY:
        w = cert.direction
        if w is None or len(w) != m or is_zero_vector(w):
            return False
        return all(dot(w, v) == 0 for v in sel)
    return False
