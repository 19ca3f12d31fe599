"""Clone-set aggregation, filtering, ranking, and corpus statistics.

Snippets group by their alphanumeric projection; the 64-bit fingerprint
is only an accelerator key. Hash collisions (equal fingerprint, unequal
projection) split into separate sets carrying a synthetic disambiguator.
Index construction is insertion-order independent, so partitioned or
parallel ingestion yields bit-identical results.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from datetime import datetime
from typing import Iterable, Sequence

import numpy as np

from .normalizer import NormalizedSnippet

# NLOC thresholds always reported alongside the active one: 6 filters out
# trivial snippets, 20 the stricter non-trivial cut.
REPORTED_THRESHOLDS = (6, 20)


@dataclass(frozen=True, order=True)
class Occurrence:
    """One code block holding a snippet, located by post and block index."""

    post_id: int
    thread_id: int
    block_index: int
    creation_date: datetime
    author_id: int | None = None


def _occurrence_sort_key(occ: Occurrence) -> tuple:
    return (occ.creation_date, occ.post_id, occ.block_index)


@dataclass(frozen=True)
class CloneSet:
    """All occurrences of one projection, with its distinct-thread census."""

    fingerprint: int
    content: str
    nloc: int
    projection: str
    occurrences: tuple[Occurrence, ...]
    thread_ids: frozenset[int]
    collision_id: int = 0

    @property
    def thread_count(self) -> int:
        return len(self.thread_ids)

    @property
    def key(self) -> str:
        """Stable external identifier: fingerprint hex, disambiguated on collision."""
        hex16 = f"{self.fingerprint:016x}"
        return hex16 if self.collision_id == 0 else f"{hex16}-{self.collision_id}"


@dataclass(frozen=True)
class CloneStats:
    """Corpus-level duplication metrics at a given NLOC threshold."""

    distinct_fingerprints: int
    cloned_fingerprints: int
    cloned_fraction: float
    filtered_count_by_threshold: dict[int, int]
    nloc_mean: float | None
    nloc_sd: float | None
    nloc_median: float | None
    nloc_iqr: float | None
    thread_mean: float | None
    thread_sd: float | None
    thread_median: float | None
    thread_iqr: float | None
    pct_more_than_two_threads: float | None
    thread_count_histogram: dict[int, int] = field(default_factory=dict)


class CloneIndex:
    """Finalized, immutable collection of clone sets in rank order."""

    def __init__(self, sets: Sequence[CloneSet], block_count: int):
        self.sets: tuple[CloneSet, ...] = tuple(rank(sets))
        self.by_key: dict[str, CloneSet] = {s.key: s for s in self.sets}
        self.block_count = block_count

    @property
    def distinct_fingerprints(self) -> int:
        return len(self.sets)

    @property
    def cloned_fingerprints(self) -> int:
        return sum(1 for s in self.sets if s.thread_count >= 2)

    def clone_sets(self, min_threads: int = 2, min_nloc: int = 0) -> list[CloneSet]:
        return clone_sets(self, min_threads=min_threads, min_nloc=min_nloc)

    def corpus_stats(self, min_nloc: int, min_threads: int = 2) -> CloneStats:
        return compute_stats(self.sets, min_nloc=min_nloc, min_threads=min_threads)


def build_index(snippets: Iterable[tuple[Occurrence, NormalizedSnippet]]) -> CloneIndex:
    """Group (occurrence, snippet) pairs into clone sets keyed by projection.

    Snippets that normalize to nothing (nloc == 0) are excluded. Duplicate
    blocks within one post or thread stay as separate occurrences but count
    once toward the thread census.
    """
    groups: dict[str, list[tuple[Occurrence, NormalizedSnippet]]] = defaultdict(list)
    block_count = 0
    for occ, snip in snippets:
        if snip.nloc == 0:
            continue
        groups[snip.projection].append((occ, snip))
        block_count += 1

    # collision split: distinct projections under one fingerprint get
    # disambiguators in projection order
    by_fp: dict[int, list[str]] = defaultdict(list)
    for projection, members in groups.items():
        by_fp[members[0][1].fingerprint].append(projection)
    collision_ids = {
        projection: idx
        for projections in by_fp.values()
        for idx, projection in enumerate(sorted(projections))
    }

    sets = []
    for projection, members in groups.items():
        members.sort(key=lambda pair: _occurrence_sort_key(pair[0]))
        representative = members[0][1]
        sets.append(
            CloneSet(
                fingerprint=representative.fingerprint,
                content=representative.content,
                nloc=representative.nloc,
                projection=projection,
                occurrences=tuple(occ for occ, _snip in members),
                thread_ids=frozenset(occ.thread_id for occ, _snip in members),
                collision_id=collision_ids[projection],
            )
        )
    return CloneIndex(sets, block_count)


def rank(sets: Iterable[CloneSet]) -> list[CloneSet]:
    """Order clone sets by thread count desc, NLOC desc, then identity keys."""
    return sorted(
        sets,
        key=lambda s: (-s.thread_count, -s.nloc, s.fingerprint, s.content),
    )


def clone_sets(index: CloneIndex, min_threads: int = 2, min_nloc: int = 0) -> list[CloneSet]:
    """Ranked clone sets present in at least `min_threads` threads at `min_nloc`."""
    return [
        s for s in index.sets
        if s.thread_count >= min_threads and s.nloc >= min_nloc
    ]


def corpus_stats(index: CloneIndex, min_nloc: int, min_threads: int = 2) -> CloneStats:
    """Duplication statistics over the whole index, distributions at the filter."""
    return compute_stats(index.sets, min_nloc=min_nloc, min_threads=min_threads)


def _distribution(values: Sequence[float]) -> tuple[float | None, ...]:
    """(mean, sample sd, median, iqr); sd needs n >= 2, the rest n >= 1."""
    n = len(values)
    if n == 0:
        return (None, None, None, None)
    arr = np.asarray(values, dtype=float)
    sd = float(np.std(arr, ddof=1)) if n >= 2 else None
    q1, med, q3 = (float(q) for q in np.percentile(arr, [25, 50, 75]))
    return (float(np.mean(arr)), sd, med, q3 - q1)


def compute_stats(
    all_sets: Sequence[CloneSet], min_nloc: int, min_threads: int = 2
) -> CloneStats:
    distinct = len(all_sets)
    cloned = sum(1 for s in all_sets if s.thread_count >= 2)
    filtered = [
        s for s in all_sets
        if s.thread_count >= min_threads and s.nloc >= min_nloc
    ]
    thresholds = sorted({*REPORTED_THRESHOLDS, min_nloc})
    counts_by_threshold = {
        t: sum(1 for s in all_sets if s.thread_count >= min_threads and s.nloc >= t)
        for t in thresholds
    }

    nloc_mean, nloc_sd, nloc_median, nloc_iqr = _distribution([s.nloc for s in filtered])
    thread_mean, thread_sd, thread_median, thread_iqr = _distribution(
        [s.thread_count for s in filtered]
    )
    pct_over_two = (
        sum(1 for s in filtered if s.thread_count > 2) / len(filtered)
        if filtered else None
    )
    histogram = dict(sorted(Counter(s.thread_count for s in filtered).items()))

    return CloneStats(
        distinct_fingerprints=distinct,
        cloned_fingerprints=cloned,
        cloned_fraction=(cloned / distinct) if distinct else 0.0,
        filtered_count_by_threshold=counts_by_threshold,
        nloc_mean=nloc_mean,
        nloc_sd=nloc_sd,
        nloc_median=nloc_median,
        nloc_iqr=nloc_iqr,
        thread_mean=thread_mean,
        thread_sd=thread_sd,
        thread_median=thread_median,
        thread_iqr=thread_iqr,
        pct_more_than_two_threads=pct_over_two,
        thread_count_histogram=histogram,
    )
