"""JSON schemas, canonical encoding, digests, and check certificates.

Every document carries ``schemaVersion: 1`` and serializes rationals as
exact ``num/den`` strings.  Certificate digests are SHA-256 over the
canonical compact encoding (sorted keys, no whitespace), so a build report
and an independent re-verification of the same object produce identical
digests.  The payload builders here are shared by ``build`` and ``verify``
for exactly that reason.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from typing import Iterable, Sequence

from . import parallel
from .errors import BadParametersError, SchemaError
from .gale import PointConfiguration, gale_dual, realize, supporting_hyperplane
from .linalg import format_rational, parse_rational
from .lp import DependenceCertificate
from .mani import (
    BlockDiagramPlan,
    CounterexampleReport,
    ManiConstruction,
    _midpoint_task,
    _vertex_task,
    formulas,
)
from .polytope import IncidencePolytope, illumination_report
from .spanning import (
    VectorConfiguration,
    is_minimal_k_spanning,
    is_positively_k_spanning,
)

SCHEMA_VERSION = 1

# every build report lists its certificates in this order
CHECK_ORDER = (
    "designatedAreFacets",
    "complementsCoverVertices",
    "f0MatchesFormula",
    "allPointsVertices",
    "illuminated",
    "unneighborly",
    "nonsimplicial",
    "simplicial",
    "minimal2spanningDual",
)


# ---------------------------------------------------------------------------
# Canonical encoding and digests


def canonical_bytes(doc) -> bytes:
    """Compact, key-sorted, ASCII encoding; the digest input."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":")).encode("ascii")


def digest(doc) -> str:
    return hashlib.sha256(canonical_bytes(doc)).hexdigest()


def dumps(doc) -> str:
    """One-line canonical rendering used for all stdout documents."""
    return canonical_bytes(doc).decode("ascii")


def write_document(doc, path: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(json.dumps(doc, sort_keys=True, indent=1))
        fh.write("\n")


def read_document(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"{path}: not valid JSON ({exc})") from None
    return doc


# ---------------------------------------------------------------------------
# Rational helpers


def _rat_list(values: Iterable[Fraction]) -> list[str]:
    return [format_rational(v) for v in values]


def _parse_rat_list(values, where: str) -> tuple[Fraction, ...]:
    if not isinstance(values, list):
        raise SchemaError(f"{where}: expected a list of rational strings")
    try:
        return tuple(parse_rational(v) for v in values)
    except (ValueError, TypeError) as exc:
        raise SchemaError(f"{where}: {exc}") from None


def _require(doc: dict, key: str, where: str):
    if key not in doc:
        raise SchemaError(f"{where}: missing required key {key!r}")
    return doc[key]


def _check_version(doc: dict, where: str) -> None:
    version = doc.get("schemaVersion", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise SchemaError(f"{where}: unsupported schemaVersion {version!r}")


# ---------------------------------------------------------------------------
# Document serializers


def config_to_json(config: VectorConfiguration) -> dict:
    return {
        "schemaVersion": SCHEMA_VERSION,
        "m": config.m,
        "vectors": [
            {"label": lab, "coords": _rat_list(vec)}
            for lab, vec in zip(config.labels, config.coords)
        ],
    }


def config_from_json(doc: dict) -> VectorConfiguration:
    where = "configuration"
    _check_version(doc, where)
    m = _require(doc, "m", where)
    vectors = _require(doc, "vectors", where)
    if not isinstance(m, int) or not isinstance(vectors, list):
        raise SchemaError(f"{where}: 'm' must be an integer and 'vectors' a list")
    pairs = []
    for i, entry in enumerate(vectors):
        if not isinstance(entry, dict):
            raise SchemaError(f"{where}: vectors[{i}] must be an object")
        lab = _require(entry, "label", f"{where}.vectors[{i}]")
        coords = _parse_rat_list(
            _require(entry, "coords", f"{where}.vectors[{i}]"),
            f"{where}.vectors[{i}].coords",
        )
        pairs.append((lab, coords))
    try:
        return VectorConfiguration.from_pairs(m, pairs)
    except BadParametersError as exc:
        raise SchemaError(f"{where}: {exc}") from None


def points_to_json(points: PointConfiguration) -> dict:
    return {
        "schemaVersion": SCHEMA_VERSION,
        "d": points.d,
        "points": [
            {"label": lab, "coords": _rat_list(vec)}
            for lab, vec in zip(points.labels, points.coords)
        ],
    }


def points_from_json(doc: dict) -> PointConfiguration:
    where = "points"
    _check_version(doc, where)
    d = _require(doc, "d", where)
    entries = _require(doc, "points", where)
    if not isinstance(d, int) or not isinstance(entries, list):
        raise SchemaError(f"{where}: 'd' must be an integer and 'points' a list")
    labels = []
    coords = []
    for i, entry in enumerate(entries):
        if not isinstance(entry, dict):
            raise SchemaError(f"{where}: points[{i}] must be an object")
        labels.append(_require(entry, "label", f"{where}.points[{i}]"))
        coords.append(
            _parse_rat_list(
                _require(entry, "coords", f"{where}.points[{i}]"),
                f"{where}.points[{i}].coords",
            )
        )
    try:
        return PointConfiguration(d=d, labels=tuple(labels), coords=tuple(coords))
    except BadParametersError as exc:
        raise SchemaError(f"{where}: {exc}") from None


def polytope_to_json(poly: IncidencePolytope) -> dict:
    return {
        "schemaVersion": SCHEMA_VERSION,
        "d": poly.d,
        "vertices": list(poly.vertices),
        "facets": [list(f) for f in poly.facets],
    }


def polytope_from_json(doc: dict) -> IncidencePolytope:
    where = "polytope"
    _check_version(doc, where)
    d = _require(doc, "d", where)
    vertices = _require(doc, "vertices", where)
    facets = _require(doc, "facets", where)
    if not isinstance(d, int):
        raise SchemaError(f"{where}: 'd' must be an integer")
    if not isinstance(vertices, list) or not all(
        isinstance(v, str) for v in vertices
    ):
        raise SchemaError(f"{where}: 'vertices' must be a list of labels")
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise SchemaError(f"{where}: 'facets' must be a list of label lists")
    try:
        return IncidencePolytope(
            d=d,
            vertices=tuple(vertices),
            facets=tuple(tuple(f) for f in facets),
        )
    except (BadParametersError, KeyError) as exc:
        raise SchemaError(f"{where}: {exc}") from None


def certificate_to_json(cert: DependenceCertificate) -> dict:
    doc: dict = {"kind": cert.kind}
    if cert.lam is not None:
        doc["lambda"] = _rat_list(cert.lam)
    if cert.functional is not None:
        doc["functional"] = _rat_list(cert.functional)
    if cert.direction is not None:
        doc["direction"] = _rat_list(cert.direction)
    return doc


def plan_to_json(plan: BlockDiagramPlan) -> dict:
    return {
        "schemaVersion": SCHEMA_VERSION,
        "d": plan.d,
        "p": plan.p,
        "q": plan.q,
        "ell": plan.ell,
        "configuration": config_to_json(plan.config),
        "designated": [
            {"name": name, "complement": list(comp)}
            for name, comp in plan.designated
        ],
    }


def plan_from_json(doc: dict) -> BlockDiagramPlan:
    where = "plan"
    _check_version(doc, where)
    config = config_from_json(_require(doc, "configuration", where))
    designated = _require(doc, "designated", where)
    if not isinstance(designated, list):
        raise SchemaError(f"{where}: 'designated' must be a list")
    named = []
    for i, entry in enumerate(designated):
        if not isinstance(entry, dict):
            raise SchemaError(f"{where}: designated[{i}] must be an object")
        name = _require(entry, "name", f"{where}.designated[{i}]")
        comp = _require(entry, "complement", f"{where}.designated[{i}]")
        named.append((name, tuple(comp)))
    try:
        return BlockDiagramPlan(
            d=_require(doc, "d", where),
            p=_require(doc, "p", where),
            q=_require(doc, "q", where),
            ell=_require(doc, "ell", where),
            config=config,
            designated=tuple(named),
        )
    except BadParametersError as exc:
        raise SchemaError(f"{where}: {exc}") from None


def detect_schema(doc) -> str:
    """Classify a document by its required keys; ambiguity is an error.

    Build reports and plans legitimately embed the leaf documents, so their
    signatures take precedence; among the leaf schemas (configuration,
    polytope, points) a document matching more than one is rejected.
    """
    if not isinstance(doc, dict):
        raise SchemaError("top-level JSON value must be an object")
    _check_version(doc, "document")
    if "checks" in doc and "plan" in doc:
        return "report"
    if "configuration" in doc and "designated" in doc:
        return "plan"
    leaf_signatures = {
        "configuration": ("m", "vectors"),
        "polytope": ("vertices", "facets"),
        "points": ("d", "points"),
    }
    matches = [
        name for name, keys in leaf_signatures.items() if all(k in doc for k in keys)
    ]
    if len(matches) == 1:
        return matches[0]
    if not matches:
        raise SchemaError(
            "unrecognized document: expected configuration, polytope, points, "
            "plan, or build-report keys"
        )
    raise SchemaError(f"ambiguous document: matches schemas {sorted(matches)}")


# ---------------------------------------------------------------------------
# Check payloads (combinatorial polytopes)


def payload_illuminated(poly: IncidencePolytope) -> dict:
    report = illumination_report(poly)
    uncovered = [v for v, w in report.diagonal_partner if w is None]
    return {
        "check": "illuminated",
        "verdict": report.illuminated,
        "partners": [[v, w] for v, w in report.diagonal_partner],
        "uncovered": uncovered,
    }


def payload_unneighborly(poly: IncidencePolytope) -> dict:
    report = illumination_report(poly)
    connected = [v for v, w in report.missing_edge_partner if w is None]
    return {
        "check": "unneighborly",
        "verdict": report.unneighborly,
        "partners": [[v, w] for v, w in report.missing_edge_partner],
        "connectedToAll": connected,
    }


def payload_simplicial(poly: IncidencePolytope) -> dict:
    fat = [list(f) for f in poly.facets if len(f) > poly.d]
    return {"check": "simplicial", "verdict": not fat, "fatFacets": fat}


def payload_nonsimplicial(poly: IncidencePolytope) -> dict:
    fat = [list(f) for f in poly.facets if len(f) > poly.d]
    return {
        "check": "nonsimplicial",
        "verdict": bool(fat),
        "fatFacet": fat[0] if fat else None,
    }


# ---------------------------------------------------------------------------
# Check payloads (plans and realized point sets)


def payload_cover(plan: BlockDiagramPlan) -> dict:
    covered = set().union(*(set(comp) for _, comp in plan.designated))
    missing = [lab for lab in plan.config.labels if lab not in covered]
    return {
        "check": "complementsCoverVertices",
        "verdict": not missing,
        "uncovered": missing,
    }


def payload_f0(plan: BlockDiagramPlan, f0: int) -> dict:
    expected = plan.d + plan.p + plan.q + 1
    return {
        "check": "f0MatchesFormula",
        "verdict": f0 == expected,
        "f0": f0,
        "expected": expected,
        "M": formulas(plan.d).M,
    }


def payload_designated_full(plan: BlockDiagramPlan, base: IncidencePolytope) -> dict:
    complements = {frozenset(base.vertices) - frozenset(f) for f in base.facets}
    entries = []
    for name, comp in plan.designated:
        entries.append(
            {
                "name": name,
                "complement": list(comp),
                "isFacetComplement": frozenset(comp) in complements,
            }
        )
    return {
        "check": "designatedAreFacets",
        "verdict": all(e["isFacetComplement"] for e in entries),
        "designated": entries,
    }


def payload_designated_points(plan: BlockDiagramPlan) -> dict:
    """Hyperplane certificates for each designated facet on realize(config)."""
    base_points = realize(plan.config)
    labels = plan.config.labels
    entries = []
    for name, comp in plan.designated:
        cset = set(comp)
        facet = tuple(lab for lab in labels if lab not in cset)
        plane = supporting_hyperplane(base_points, facet)
        entry = {
            "name": name,
            "complement": list(comp),
            "isFacetComplement": plane is not None,
        }
        if plane is not None:
            normal, offset = plane
            entry["normal"] = _rat_list(normal)
            entry["offset"] = format_rational(offset)
        entries.append(entry)
    return {
        "check": "designatedAreFacets",
        "verdict": all(e["isFacetComplement"] for e in entries),
        "designated": entries,
    }


def payload_all_vertices(
    points: PointConfiguration, workers: int = 1, assume_true: bool = False
) -> dict:
    """``assume_true`` skips the LPs when the flags were already certified
    (build reuses its construction run); the payload shape is identical."""
    if assume_true:
        flags = [True] * len(points)
    else:
        coords = points.coords
        tasks = ((coords, i) for i in range(len(coords)))
        flags = list(parallel.imap(_vertex_task, tasks, workers))
    not_vertices = [lab for lab, ok in zip(points.labels, flags) if not ok]
    return {
        "check": "allPointsVertices",
        "verdict": not not_vertices,
        "count": len(points),
        "notVertices": not_vertices,
    }


def _normalize_pairs(
    points: PointConfiguration, pairs: Sequence[Sequence[str]]
) -> list[tuple[str, str]]:
    known = set(points.labels)
    out = []
    for entry in pairs:
        pair = tuple(entry)
        if len(pair) != 2 or any(lab not in known for lab in pair):
            raise SchemaError(f"bad diagonal pair {entry!r}")
        out.append(pair)
    return out


def _midpoint_flags(
    points: PointConfiguration, pairs: Sequence[tuple[str, str]], workers: int
) -> list[bool]:
    index = {lab: i for i, lab in enumerate(points.labels)}
    coords = points.coords
    tasks = ((coords, index[a], index[b]) for a, b in pairs)
    return list(parallel.imap(_midpoint_task, tasks, workers))


def payload_illuminated_points(
    points: PointConfiguration,
    pairs: Sequence[Sequence[str]],
    workers: int = 1,
    assume_true: bool = False,
) -> dict:
    """Certify one inner diagonal per vertex by midpoint-interior LPs.

    ``assume_true`` reuses an earlier certification instead of re-running
    the LPs; the payload shape is identical either way.
    """
    pairs = _normalize_pairs(points, pairs)
    seen = {a for a, _ in pairs}
    missing = [lab for lab in points.labels if lab not in seen]
    if missing:
        flags: list[bool] = []
    elif assume_true:
        flags = [True] * len(pairs)
    else:
        flags = _midpoint_flags(points, pairs, workers)
    failing = [list(p) for p, ok in zip(pairs, flags) if not ok]
    return {
        "check": "illuminated",
        "verdict": not missing and not failing,
        "method": "midpointInterior",
        "pairs": [list(p) for p in pairs],
        "unpaired": missing,
        "failingPairs": failing,
    }


def payload_unneighborly_points(
    points: PointConfiguration,
    pairs: Sequence[Sequence[str]],
    workers: int = 1,
    assume_true: bool = False,
) -> dict:
    doc = payload_illuminated_points(points, pairs, workers, assume_true)
    doc["check"] = "unneighborly"
    return doc


def payload_nonsimplicial_points(
    points: PointConfiguration, fat_facet: Sequence[str]
) -> dict:
    plane = supporting_hyperplane(points, fat_facet)
    doc = {
        "check": "nonsimplicial",
        "verdict": plane is not None and len(fat_facet) > points.d,
        "fatFacet": list(fat_facet),
        "size": len(fat_facet),
        "d": points.d,
    }
    if plane is not None:
        normal, offset = plane
        doc["normal"] = _rat_list(normal)
        doc["offset"] = format_rational(offset)
    return doc


# ---------------------------------------------------------------------------
# Check payloads (vector configurations)


def payload_kspanning(config: VectorConfiguration, k: int, workers: int = 1) -> dict:
    report = is_positively_k_spanning(config, k, workers=workers)
    doc = {
        "check": f"kspanning:{k}",
        "verdict": report.spanning,
        "k": k,
        "n": len(config),
        "m": config.m,
    }
    if report.spanning:
        if report.certificate is not None:
            doc["certificate"] = certificate_to_json(report.certificate)
    else:
        doc["witnessDeletion"] = (
            [config.labels[i] for i in report.witness_deletion]
            if report.witness_deletion is not None
            else None
        )
        if report.certificate is not None:
            doc["certificate"] = certificate_to_json(report.certificate)
    return doc


def payload_minimal(config: VectorConfiguration, k: int, workers: int = 1) -> dict:
    base, minimality = is_minimal_k_spanning(config, k, workers=workers)
    doc = {
        "check": "minimal",
        "verdict": base.spanning and minimality.minimal,
        "k": k,
        "kSpanning": base.spanning,
        "noVectorRemovable": minimality.minimal,
        "removableIndex": (
            config.labels[minimality.removable_index]
            if minimality.removable_index is not None
            else None
        ),
        "perIndex": [
            {"removed": removed, "witnessDeletion": list(witness), "kind": kind}
            for removed, witness, kind in minimality.per_index
        ],
    }
    return doc


def payload_minimal_dual(report: CounterexampleReport) -> dict:
    """Whether the dual is certified minimal positively k-spanning.

    ``exceedsBound`` records the comparison against 2km; it is data, not a
    gate — only d = 36 beats the bound, smaller builds are still sound.
    """
    return {
        "check": "minimal2spanningDual",
        "verdict": report.spanning and report.minimal,
        "k": report.k,
        "n": len(report.dual),
        "m": report.dual.m,
        "bound": report.classical_bound,
        "spanning": report.spanning,
        "minimal": report.minimal,
        "exceedsBound": report.exceeds_bound,
        "perIndex": [
            {"removed": removed, "witnessDeletion": list(witness), "kind": kind}
            for removed, witness, kind in report.per_index
        ],
    }


# ---------------------------------------------------------------------------
# Build reports


def _ordered_payloads(payloads: dict) -> list[dict]:
    order = {name: i for i, name in enumerate(CHECK_ORDER)}
    return [
        payloads[name]
        for name in sorted(payloads, key=lambda n: (order.get(n, len(order)), n))
    ]


def _stack_to_json(cert) -> dict:
    return {
        "facet": list(cert.facet),
        "apex": cert.apex_label,
        "apexCoords": _rat_list(cert.apex),
        "normal": _rat_list(cert.normal),
        "offset": format_rational(cert.offset),
        "epsilon": format_rational(cert.epsilon),
        "trials": cert.trials,
    }


def build_report(
    construction: ManiConstruction,
    counterexample: CounterexampleReport | None = None,
    workers: int = 1,
) -> dict:
    """The full machine-readable result of a build, either mode.

    The certificates are regenerated from the report's own embedded objects
    (polytope or points), so re-deriving them from the written report gives
    byte-identical payloads and digests.
    """
    plan = construction.plan
    doc: dict = {
        "schemaVersion": SCHEMA_VERSION,
        "kind": "buildReport",
        "mode": construction.mode,
        "d": plan.d,
        "p": plan.p,
        "q": plan.q,
        "ell": plan.ell,
        "f0": construction.f0,
        "M": formulas(plan.d).M,
        "isManiSize": construction.is_mani_size,
        "plan": plan_to_json(plan),
    }
    payloads: dict[str, dict] = {
        "complementsCoverVertices": payload_cover(plan),
        "f0MatchesFormula": payload_f0(plan, construction.f0),
    }
    if construction.mode == "full":
        assert construction.base is not None and construction.stacked is not None
        doc["basePolytope"] = polytope_to_json(construction.base)
        doc["polytope"] = polytope_to_json(construction.stacked)
        payloads["designatedAreFacets"] = payload_designated_full(
            plan, construction.base
        )
        payloads["illuminated"] = payload_illuminated(construction.stacked)
        payloads["unneighborly"] = payload_unneighborly(construction.stacked)
        payloads["nonsimplicial"] = payload_nonsimplicial(construction.stacked)
        if construction.gamma_report is not None:
            gr = construction.gamma_report
            doc["gamma"] = {
                "value": gr.value,
                "vertex": gr.vertex,
                "witness": list(gr.witness),
            }
    else:
        assert construction.points is not None
        doc["points"] = points_to_json(construction.points)
        doc["stacks"] = [_stack_to_json(c) for c in construction.stacks]
        doc["fatFacet"] = list(construction.fat_facet or ())
        doc["diagonalPartner"] = [list(p) for p in construction.diagonal_partner]
        payloads["designatedAreFacets"] = payload_designated_points(plan)
        payloads["allPointsVertices"] = payload_all_vertices(
            construction.points,
            workers,
            assume_true=construction.checks.get("allPointsVertices", False),
        )
        pairs = construction.diagonal_partner
        payloads["illuminated"] = payload_illuminated_points(
            construction.points,
            pairs,
            workers,
            assume_true=construction.checks.get("illuminated", False),
        )
        payloads["unneighborly"] = payload_unneighborly_points(
            construction.points,
            pairs,
            workers,
            assume_true=construction.checks.get("unneighborly", False),
        )
        payloads["nonsimplicial"] = payload_nonsimplicial_points(
            construction.points, construction.fat_facet or ()
        )
        if counterexample is not None:
            doc["dualConfiguration"] = config_to_json(counterexample.dual)
            payloads["minimal2spanningDual"] = payload_minimal_dual(counterexample)
    ordered = _ordered_payloads(payloads)
    doc["checks"] = {p["check"]: p["verdict"] for p in ordered}
    doc["certificates"] = ordered
    doc["certificateDigests"] = {p["check"]: digest(p) for p in ordered}
    return doc


# ---------------------------------------------------------------------------
# Verification against documents


def _parse_check_names(checks: Sequence[str]) -> list[tuple[str, int | None]]:
    """Split each requested check into (name, k); validates the vocabulary."""
    out = []
    for raw in checks:
        name = raw.strip()
        if not name:
            continue
        if name.startswith("kspanning:"):
            try:
                k = int(name.split(":", 1)[1])
            except ValueError:
                raise BadParametersError(f"bad check {name!r}: k must be an integer")
            if k < 1:
                raise BadParametersError(f"bad check {name!r}: k must be >= 1")
            out.append((name, k))
        elif name in {"illuminated", "unneighborly", "simplicial", "minimal"}:
            out.append((name, None))
        else:
            raise BadParametersError(f"unknown check {name!r}")
    if not out:
        raise BadParametersError("no checks requested")
    return out


def verify_configuration(
    config: VectorConfiguration, checks: Sequence[str], workers: int = 1
) -> list[dict]:
    parsed = _parse_check_names(checks)
    names = [n for n, _ in parsed]
    ks = [k for n, k in parsed if n.startswith("kspanning:")]
    payloads = []
    for name, k in parsed:
        if name.startswith("kspanning:"):
            payloads.append(payload_kspanning(config, k, workers))
        elif name == "minimal":
            if len(ks) != 1:
                raise BadParametersError(
                    "the 'minimal' check needs exactly one kspanning:k check "
                    "alongside it to fix k"
                )
            payloads.append(payload_minimal(config, ks[0], workers))
        else:
            raise BadParametersError(
                f"check {name!r} does not apply to a vector configuration"
            )
    assert len(payloads) == len(names)
    return payloads


def verify_polytope(
    poly: IncidencePolytope, checks: Sequence[str], workers: int = 1
) -> list[dict]:
    parsed = _parse_check_names(checks)
    payloads = []
    for name, _ in parsed:
        if name == "illuminated":
            payloads.append(payload_illuminated(poly))
        elif name == "unneighborly":
            payloads.append(payload_unneighborly(poly))
        elif name == "simplicial":
            payloads.append(payload_simplicial(poly))
        else:
            raise BadParametersError(
                f"check {name!r} does not apply to a combinatorial polytope"
            )
    return payloads


def rederive_report_payload(report: dict, name: str, workers: int = 1) -> dict:
    """Recompute one check certificate from a build report's embedded data."""
    where = "report"
    mode = _require(report, "mode", where)
    plan = plan_from_json(_require(report, "plan", where))
    if mode == "full":
        poly = polytope_from_json(_require(report, "polytope", where))
        if name == "illuminated":
            return payload_illuminated(poly)
        if name == "unneighborly":
            return payload_unneighborly(poly)
        if name == "nonsimplicial":
            return payload_nonsimplicial(poly)
        if name == "simplicial":
            return payload_simplicial(poly)
        if name == "designatedAreFacets":
            base = polytope_from_json(_require(report, "basePolytope", where))
            return payload_designated_full(plan, base)
        if name == "complementsCoverVertices":
            return payload_cover(plan)
        if name == "f0MatchesFormula":
            return payload_f0(plan, poly.f0)
        raise BadParametersError(f"cannot re-derive check {name!r} from a full report")
    if mode == "certificate":
        points = points_from_json(_require(report, "points", where))
        if name == "illuminated":
            pairs = _require(report, "diagonalPartner", where)
            return payload_illuminated_points(points, pairs, workers)
        if name == "unneighborly":
            pairs = _require(report, "diagonalPartner", where)
            return payload_unneighborly_points(points, pairs, workers)
        if name == "nonsimplicial":
            return payload_nonsimplicial_points(points, _require(report, "fatFacet", where))
        if name == "simplicial":
            fat = _require(report, "fatFacet", where)
            plane = supporting_hyperplane(points, fat)
            return {
                "check": "simplicial",
                "verdict": not (plane is not None and len(fat) > points.d),
                "fatFacets": [list(fat)] if plane is not None else [],
            }
        if name == "allPointsVertices":
            return payload_all_vertices(points, workers)
        if name == "designatedAreFacets":
            return payload_designated_points(plan)
        if name == "complementsCoverVertices":
            return payload_cover(plan)
        if name == "f0MatchesFormula":
            return payload_f0(plan, len(points))
        if name == "minimal2spanningDual":
            from .mani import dual_spanning_report

            construction = ManiConstruction(plan=plan, mode="certificate")
            construction.points = points
            return payload_minimal_dual(
                dual_spanning_report(construction, k=2, workers=workers)
            )
        if name.startswith("kspanning:") or name == "minimal":
            if "dualConfiguration" not in report:
                raise BadParametersError(
                    f"check {name!r} needs a report with a dual configuration"
                )
            dual = config_from_json(report["dualConfiguration"])
            k = int(name.split(":", 1)[1]) if name.startswith("kspanning:") else 2
            if name == "minimal":
                return payload_minimal(dual, k, workers)
            return payload_kspanning(dual, k, workers)
        raise BadParametersError(
            f"cannot re-derive check {name!r} from a certificate report"
        )
    raise SchemaError(f"report: unknown mode {mode!r}")


def verify_report(report: dict, checks: Sequence[str] | None, workers: int = 1) -> list[dict]:
    """Re-derive certificates for a build report.

    With no explicit checks, every check recorded in the report is re-run
    from the embedded objects; the digests of the resulting payloads must
    match the report's own (that equality is the round-trip invariant, left
    to the caller to assert or simply trust by determinism).
    """
    recorded = _require(report, "checks", "report")
    if checks:
        requested = []
        for name, _ in _parse_check_names(checks):
            if name == "simplicial" and "nonsimplicial" in recorded:
                requested.append("simplicial")
            elif name in recorded or name.startswith("kspanning:") or name == "minimal":
                requested.append(name)
            else:
                raise BadParametersError(
                    f"check {name!r} is not recorded in this report"
                )
    else:
        # same ordering as the build output, so round trips are line-stable
        order = {name: i for i, name in enumerate(CHECK_ORDER)}
        requested = sorted(recorded, key=lambda n: (order.get(n, len(order)), n))
    return [rederive_report_payload(report, name, workers) for name in requested]


def verify_document(doc, checks: Sequence[str] | None, workers: int = 1) -> list[dict]:
    """Dispatch verification by detected schema; returns check payloads."""
    schema = detect_schema(doc)
    if schema == "configuration":
        if not checks:
            raise BadParametersError(
                "a vector configuration needs explicit --checks (e.g. kspanning:2)"
            )
        return verify_configuration(config_from_json(doc), checks, workers)
    if schema == "polytope":
        if not checks:
            raise BadParametersError(
                "a polytope needs explicit --checks (e.g. illuminated)"
            )
        return verify_polytope(polytope_from_json(doc), checks, workers)
    if schema == "report":
        return verify_report(doc, checks, workers)
    raise BadParametersError(f"no checks are defined for {schema} documents")
