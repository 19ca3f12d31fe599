"""End-to-end run: ingest a corpus, index it, and write the output directory."""

from __future__ import annotations

import hashlib
import logging
from dataclasses import dataclass
from pathlib import Path

from . import cloneindex, linkanalysis, reporter
from .cloneindex import CloneIndex, CloneSet, CloneStats, Occurrence
from .corpus import Post, extract_code_blocks, parse_posts
from .normalizer import process_block

logger = logging.getLogger(__name__)


@dataclass
class AnalysisResult:
    index: CloneIndex
    stats: CloneStats
    selected: list[CloneSet]
    posts: dict[int, Post]
    corpus_digest: str
    out_dir: Path | None = None


def index_posts(posts: list[Post]) -> CloneIndex:
    """Extract, normalize, and index the code blocks of question/answer posts."""
    pairs = []
    for post in posts:
        if post.post_type not in ("question", "answer"):
            continue
        for block in extract_code_blocks(post):
            snippet = process_block(block)
            if snippet.nloc == 0:
                continue
            occurrence = Occurrence(
                post_id=post.post_id,
                thread_id=post.thread_id,
                block_index=block.block_index,
                creation_date=post.creation_date,
                author_id=post.author_id,
            )
            pairs.append((occurrence, snippet))
    return cloneindex.build_index(pairs)


def analyze_corpus(
    input_path: str | Path,
    fmt: str,
    out_dir: str | Path | None = None,
    *,
    min_nloc: int = 6,
    min_threads: int = 2,
    rules_path: str | Path | None = None,
) -> AnalysisResult:
    """Run the full analysis; when `out_dir` is given, write summary.json,
    histogram.csv, and clone-sets/<key>.json for every selected set."""
    input_path = Path(input_path)
    data = input_path.read_bytes()
    digest = hashlib.sha256(data).hexdigest()

    import io

    posts = list(parse_posts(io.BytesIO(data), fmt))
    post_map = {p.post_id: p for p in posts}
    index = index_posts(posts)
    stats = cloneindex.corpus_stats(index, min_nloc=min_nloc, min_threads=min_threads)
    selected = cloneindex.clone_sets(index, min_threads=min_threads, min_nloc=min_nloc)
    logger.info(
        "indexed %d blocks, %d distinct sets, %d selected at min_nloc=%d min_threads=%d",
        index.block_count, index.distinct_fingerprints, len(selected),
        min_nloc, min_threads,
    )

    result = AnalysisResult(
        index=index,
        stats=stats,
        selected=selected,
        posts=post_map,
        corpus_digest=digest,
    )
    if out_dir is None:
        return result

    rules = (
        linkanalysis.load_rules(rules_path)
        if rules_path is not None
        else linkanalysis.default_rules()
    )
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    reporter.write_summary(
        stats,
        out / "summary.json",
        min_nloc=min_nloc,
        min_threads=min_threads,
        corpus_digest=digest,
    )
    reporter.write_histogram(stats, out / "histogram.csv")
    sets_dir = out / "clone-sets"
    sets_dir.mkdir(exist_ok=True)
    for clone_set in selected:
        origin = linkanalysis.analyze_origin(clone_set, post_map, rules)
        reporter.export_clone_set(clone_set, origin, sets_dir / f"{clone_set.key}.json")
    result.out_dir = out
    return result
