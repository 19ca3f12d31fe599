"""File outputs: summary document, thread-count histogram, per-set exports.

Everything is written as diffable structured text (JSON / CSV) with a
fixed field order, so identical inputs produce identical bytes and every
document re-parses to the values it was written from.
"""

from __future__ import annotations

import csv
import json
from datetime import datetime
from pathlib import Path
from typing import Any

from .cloneindex import CloneSet, CloneStats, Occurrence
from .corpus import parse_timestamp
from .linkanalysis import OriginReport, SourceLink


def _fmt_ts(dt: datetime) -> str:
    return dt.isoformat().replace("+00:00", "Z")


def _round1(value: float | None) -> str | None:
    return None if value is None else f"{value:.1f}"


def _pct1(value: float | None) -> str | None:
    return None if value is None else f"{value * 100:.1f}%"


def _round_g(value: float | None) -> str | None:
    return None if value is None else f"{value:g}"


def write_summary(
    stats: CloneStats,
    path: str | Path,
    *,
    min_nloc: int,
    min_threads: int = 2,
    corpus_digest: str | None = None,
    tool_version: str | None = None,
) -> Path:
    """Write the full statistics document plus run metadata and a block
    rounded the way the figures are usually quoted (one decimal for
    means/SD, one-decimal percentages)."""
    if tool_version is None:
        from . import __version__ as tool_version
    doc: dict[str, Any] = {
        "run": {
            "corpus_digest": corpus_digest,
            "min_nloc": min_nloc,
            "min_threads": min_threads,
            "tool_version": tool_version,
            "statistics_conventions": (
                "sample standard deviation (n-1); "
                "median/quartiles by linear interpolation (type 7); IQR = Q3 - Q1"
            ),
        },
        "distinct_fingerprints": stats.distinct_fingerprints,
        "cloned_fingerprints": stats.cloned_fingerprints,
        "cloned_fraction": stats.cloned_fraction,
        "filtered_count_by_threshold": {
            str(t): c for t, c in sorted(stats.filtered_count_by_threshold.items())
        },
        "nloc_mean": stats.nloc_mean,
        "nloc_sd": stats.nloc_sd,
        "nloc_median": stats.nloc_median,
        "nloc_iqr": stats.nloc_iqr,
        "thread_mean": stats.thread_mean,
        "thread_sd": stats.thread_sd,
        "thread_median": stats.thread_median,
        "thread_iqr": stats.thread_iqr,
        "pct_more_than_two_threads": stats.pct_more_than_two_threads,
        "thread_count_histogram": {
            str(k): v for k, v in sorted(stats.thread_count_histogram.items())
        },
        "rounded": {
            "cloned_fraction": _pct1(stats.cloned_fraction),
            "nloc_mean": _round1(stats.nloc_mean),
            "nloc_sd": _round1(stats.nloc_sd),
            "nloc_median": _round_g(stats.nloc_median),
            "nloc_iqr": _round_g(stats.nloc_iqr),
            "thread_mean": _round1(stats.thread_mean),
            "thread_sd": _round1(stats.thread_sd),
            "thread_median": _round_g(stats.thread_median),
            "thread_iqr": _round_g(stats.thread_iqr),
            "pct_more_than_two_threads": _pct1(stats.pct_more_than_two_threads),
        },
    }
    out = Path(path)
    out.write_text(json.dumps(doc, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    return out


def load_summary(path: str | Path) -> tuple[CloneStats, dict[str, Any]]:
    """Re-parse a summary document into (CloneStats, run metadata)."""
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    stats = CloneStats(
        distinct_fingerprints=doc["distinct_fingerprints"],
        cloned_fingerprints=doc["cloned_fingerprints"],
        cloned_fraction=doc["cloned_fraction"],
        filtered_count_by_threshold={
            int(k): v for k, v in doc["filtered_count_by_threshold"].items()
        },
        nloc_mean=doc["nloc_mean"],
        nloc_sd=doc["nloc_sd"],
        nloc_median=doc["nloc_median"],
        nloc_iqr=doc["nloc_iqr"],
        thread_mean=doc["thread_mean"],
        thread_sd=doc["thread_sd"],
        thread_median=doc["thread_median"],
        thread_iqr=doc["thread_iqr"],
        pct_more_than_two_threads=doc["pct_more_than_two_threads"],
        thread_count_histogram={
            int(k): v for k, v in doc["thread_count_histogram"].items()
        },
    )
    return stats, doc["run"]


def write_histogram(stats: CloneStats, path: str | Path) -> Path:
    """Write `thread_count,clone_set_count` rows in ascending thread count."""
    out = Path(path)
    with out.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["thread_count", "clone_set_count"])
        for thread_count, count in sorted(stats.thread_count_histogram.items()):
            writer.writerow([thread_count, count])
    return out


def load_histogram(path: str | Path) -> dict[int, int]:
    with Path(path).open(encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        return {int(row["thread_count"]): int(row["clone_set_count"]) for row in reader}


def _occurrence_doc(occ: Occurrence) -> dict[str, Any]:
    return {
        "post_id": occ.post_id,
        "thread_id": occ.thread_id,
        "block_index": occ.block_index,
        "creation_date": _fmt_ts(occ.creation_date),
        "author_id": occ.author_id,
    }


def _link_doc(link: SourceLink) -> dict[str, Any]:
    return {
        "url": link.url,
        "domain": link.domain,
        "source_class": link.source_class,
        "license_hint": link.license_hint,
    }


def export_clone_set(
    clone_set: CloneSet, origin: OriginReport, path: str | Path
) -> Path:
    """Write one clone set with its occurrences, links, and origin evidence."""
    if clone_set.fingerprint != origin.fingerprint or clone_set.key != origin.key:
        raise ValueError(
            f"clone set {clone_set.key} and origin report {origin.key} "
            "refer to different fingerprints"
        )
    doc: dict[str, Any] = {
        "fingerprint": f"{clone_set.fingerprint:016x}",
        "key": clone_set.key,
        "content": clone_set.content,
        "nloc": clone_set.nloc,
        "thread_count": clone_set.thread_count,
        "occurrences": [_occurrence_doc(occ) for occ in clone_set.occurrences],
        "links": {
            str(pid): {
                "internal": [
                    _link_doc(l) for l in links if l.source_class == "qa_internal"
                ],
                "external": [
                    _link_doc(l) for l in links if l.source_class != "qa_internal"
                ],
            }
            for pid, links in origin.post_links.items()
        },
        "origin": {
            "earliest_occurrence": _occurrence_doc(origin.earliest_occurrence),
            "external_candidates": [
                {**_link_doc(link), "cited_by_posts": origin.citation_counts[link.domain]}
                for link in origin.external_candidates
            ],
            "same_author_chain": origin.same_author_chain,
        },
        "attribution": {
            domain: {str(pid): status for pid, status in per_post.items()}
            for domain, per_post in origin.attribution.items()
        },
    }
    out = Path(path)
    out.write_text(json.dumps(doc, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    return out


def load_clone_set(path: str | Path) -> dict[str, Any]:
    """Re-parse an exported clone-set document (JSON payload as served)."""
    return json.loads(Path(path).read_text(encoding="utf-8"))


def parse_occurrence_doc(doc: dict[str, Any]) -> Occurrence:
    """Reconstruct an Occurrence from its exported form."""
    return Occurrence(
        post_id=doc["post_id"],
        thread_id=doc["thread_id"],
        block_index=doc["block_index"],
        creation_date=parse_timestamp(doc["creation_date"]),
        author_id=doc["author_id"],
    )
