"""clonescope: cross-thread code-clone detection and analysis for Q&A corpora."""

from __future__ import annotations

__version__ = "0.1.0"

from .cloneindex import (
    CloneIndex,
    CloneSet,
    CloneStats,
    Occurrence,
    build_index,
    clone_sets,
    corpus_stats,
    rank,
)
from .corpus import CodeBlock, CorpusError, Post, extract_code_blocks, parse_posts
from .linkanalysis import (
    OriginReport,
    SourceLink,
    analyze_origin,
    classify_source,
    default_rules,
    extract_links,
    load_rules,
)
from .normalizer import (
    NormalizedSnippet,
    fingerprint,
    nloc,
    normalize,
    process_block,
    project_alnum,
)
from .pipeline import analyze_corpus, index_posts

__all__ = [
    "CloneIndex",
    "CloneSet",
    "CloneStats",
    "CodeBlock",
    "CorpusError",
    "NormalizedSnippet",
    "Occurrence",
    "OriginReport",
    "Post",
    "SourceLink",
    "analyze_corpus",
    "analyze_origin",
    "build_index",
    "classify_source",
    "clone_sets",
    "corpus_stats",
    "default_rules",
    "extract_code_blocks",
    "extract_links",
    "fingerprint",
    "index_posts",
    "load_rules",
    "nloc",
    "normalize",
    "parse_posts",
    "process_block",
    "project_alnum",
    "rank",
]
