"""Positively k-spanning vector configurations.

A configuration is an ordered, labeled list of vectors in R^m.  It is
positively k-spanning when deleting any k-1 vectors leaves a set whose
nonnegative combinations fill R^m, and minimally so when no single vector
can be dropped without losing that property.  Both predicates are decided
by exhaustive deletion scans over the exact LP core, and every verdict is
backed by a certificate for its witness case.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import BadParametersError, DimensionMismatchError
from .linalg import QQ, as_vector
from .lp import DependenceCertificate, positively_spans
from . import parallel


@dataclass(frozen=True)
class VectorConfiguration:
    """Ordered labeled vectors in R^m; labels are distinct nonempty strings."""

    m: int
    labels: tuple[str, ...]
    coords: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.m < 0:
            raise BadParametersError("ambient dimension must be nonnegative")
        if len(self.labels) != len(self.coords):
            raise DimensionMismatchError("labels and coordinates differ in length")
        if len(set(self.labels)) != len(self.labels):
            raise BadParametersError("labels must be distinct")
        if any(not lab for lab in self.labels):
            raise BadParametersError("labels must be nonempty")
        if any(len(v) != self.m for v in self.coords):
            raise DimensionMismatchError("vector length differs from ambient dimension")

    @classmethod
    def from_pairs(cls, m: int, pairs: Iterable[tuple[str, Sequence]]) -> "VectorConfiguration":
        labels = []
        coords = []
        for lab, v in pairs:
            labels.append(str(lab))
            coords.append(as_vector(v))
        return cls(m=m, labels=tuple(labels), coords=tuple(coords))

    def __len__(self) -> int:
        return len(self.labels)

    def pairs(self) -> tuple[tuple[str, tuple[Fraction, ...]], ...]:
        return tuple(zip(self.labels, self.coords))

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise BadParametersError(f"no vector labeled {label!r}") from None

    def subconfiguration(self, indices: Iterable[int]) -> "VectorConfiguration":
        idx = tuple(sorted(set(indices)))
        for i in idx:
            if not 0 <= i < len(self):
                raise BadParametersError(f"index {i} out of range")
        return VectorConfiguration(
            m=self.m,
            labels=tuple(self.labels[i] for i in idx),
            coords=tuple(self.coords[i] for i in idx),
        )

    def delete(self, indices: Iterable[int]) -> "VectorConfiguration":
        drop = set(indices)
        return self.subconfiguration(i for i in range(len(self)) if i not in drop)


@dataclass(frozen=True)
class SpanningReport:
    """Verdict of a k-spanning scan with its first failing deletion, if any.

    ``witness_deletion`` is the lexicographically least (k-1)-subset whose
    removal breaks positive spanning; ``certificate`` proves that failure.
    Both are None on a positive verdict.
    """

    spanning: bool
    k: int
    witness_deletion: tuple[int, ...] | None = None
    certificate: DependenceCertificate | None = None


@dataclass(frozen=True)
class MinimalityReport:
    """Verdict of the single-deletion minimality scan.

    On a non-minimal verdict ``removable_index`` is the least index whose
    removal keeps the configuration positively k-spanning.  On a minimal
    verdict ``per_index`` records, for each removed index, the witness
    deletion (as labels of the original configuration) and certificate kind
    that break k-spanning after the removal.
    """

    minimal: bool
    k: int
    removable_index: int | None = None
    per_index: tuple[tuple[str, tuple[str, ...], str], ...] = ()


def _vacuous_failure(config: VectorConfiguration, k: int) -> SpanningReport:
    size = min(k - 1, len(config))
    cert = DependenceCertificate(
        "RankDeficiency",
        direction=tuple(QQ(1) if i == 0 else QQ(0) for i in range(config.m)),
    )
    return SpanningReport(False, k, witness_deletion=tuple(range(size)), certificate=cert)


def _check_deletion(args):
    config, k, deletion = args
    remaining = [i for i in range(len(config)) if i not in set(deletion)]
    ok, cert = positively_spans(config.coords, remaining)
    return deletion, ok, cert


def is_positively_k_spanning(
    config: VectorConfiguration, k: int, workers: int = 1
) -> SpanningReport:
    """Scan all (k-1)-deletions; report the least failing one, if any.

    Deleting k-1 of fewer than k-1 vectors is impossible, so configurations
    with n <= k-1 fail vacuously with a maximal witness deletion.
    """
    if k < 1:
        raise BadParametersError("k must be at least 1")
    if config.m < 1:
        raise BadParametersError("ambient dimension must be at least 1")
    n = len(config)
    if k - 1 >= n:
        return _vacuous_failure(config, k)
    deletions = itertools.combinations(range(n), k - 1)
    tasks = ((config, k, d) for d in deletions)
    for deletion, ok, cert in parallel.imap(_check_deletion, tasks, workers):
        if not ok:
            return SpanningReport(False, k, witness_deletion=deletion, certificate=cert)
    return SpanningReport(True, k)


def _check_removal(args):
    config, k, index = args
    report = is_positively_k_spanning(config.delete((index,)), k)
    return index, report


def is_minimal_k_spanning(
    config: VectorConfiguration, k: int, workers: int = 1
) -> tuple[SpanningReport, MinimalityReport]:
    """Check k-spanning, then that every single removal destroys it.

    Returns the base spanning report plus the minimality report; minimality
    is vacuously false when the configuration is not k-spanning at all.
    """
    base = is_positively_k_spanning(config, k, workers=workers)
    if not base.spanning:
        return base, MinimalityReport(False, k)
    per_index = []
    tasks = ((config, k, i) for i in range(len(config)))
    for index, report in parallel.imap(_check_removal, tasks, workers):
        if report.spanning:
            return base, MinimalityReport(False, k, removable_index=index)
        sub = config.delete((index,))
        witness_labels = tuple(sub.labels[j] for j in report.witness_deletion)
        per_index.append((config.labels[index], witness_labels, report.certificate.kind))
    return base, MinimalityReport(True, k, per_index=tuple(per_index))


def standard_minimal_config(m: int, k: int) -> VectorConfiguration:
    """k copies of each of +-e_1 ... +-e_m: the classical 2km-size instance.

    Labels read ``+e1.1`` for the first copy of e_1, ``-e1.1`` for the first
    copy of -e_1, and so on.
    """
    if m < 1 or k < 1:
        raise BadParametersError("m and k must be at least 1")
    pairs = []
    for i in range(1, m + 1):
        for sign, s in ((1, "+"), (-1, "-")):
            for copy in range(1, k + 1):
                v = [QQ(0)] * m
                v[i - 1] = QQ(sign)
                pairs.append((f"{s}e{i}.{copy}", v))
    return VectorConfiguration.from_pairs(m, pairs)
