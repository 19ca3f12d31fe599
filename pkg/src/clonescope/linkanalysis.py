"""Link extraction, source classification, and origin/attribution analysis.

Collects citation URLs from post prose (code regions are masked out),
classifies their domains against an editable rule table, and builds the
per-clone-set evidence an analyst needs: earliest occurrence, ranked
external source candidates, same-author chains, and which posts attribute
which candidate source.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping
from urllib.parse import urlsplit

from .cloneindex import CloneSet, Occurrence
from .corpus import Post, code_spans

logger = logging.getLogger(__name__)

SOURCE_CLASSES = ("qa_internal", "reference_doc", "tutorial_site", "code_host", "unknown")

_MD_LINK_RE = re.compile(r"\[[^\]]*\]\(\s*<?([^)\s>]+)>?(?:\s+[\"'][^\"']*[\"'])?\s*\)")
_HTML_ANCHOR_RE = re.compile(r"<a\s[^>]*?href\s*=\s*[\"']([^\"']+)[\"']", re.IGNORECASE)
_BARE_URL_RE = re.compile(r"https?://[^\s<>\"')\]]+", re.IGNORECASE)
_TRAILING_PUNCT = ".,;:!?"


@dataclass(frozen=True)
class SourceLink:
    """A cited URL with its domain and (after classification) source class."""

    url: str
    domain: str
    source_class: str = "unknown"
    license_hint: str | None = None


@dataclass(frozen=True)
class DomainRule:
    domain: str
    source_class: str
    license_hint: str | None = None


@dataclass(frozen=True)
class OriginReport:
    """Origin evidence for one clone set; the analyst draws the conclusion."""

    fingerprint: int
    key: str
    earliest_occurrence: Occurrence
    external_candidates: tuple[SourceLink, ...]
    citation_counts: dict[str, int]
    same_author_chain: bool
    attribution: dict[str, dict[int, str]]
    post_links: dict[int, tuple[SourceLink, ...]] = field(default_factory=dict)


def load_rules(path: str | Path) -> list[DomainRule]:
    """Read a rule table: `domain<TAB>class<TAB>license_hint`, `#` comments."""
    rules = []
    text = Path(path).read_text(encoding="utf-8")
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) < 2:
            raise ValueError(f"{path}: line {lineno}: expected domain<TAB>class")
        domain, source_class = parts[0].strip().lower(), parts[1].strip()
        if source_class not in SOURCE_CLASSES:
            raise ValueError(
                f"{path}: line {lineno}: unknown source class {source_class!r}"
            )
        hint = parts[2].strip() if len(parts) > 2 and parts[2].strip() else None
        rules.append(DomainRule(domain=domain, source_class=source_class, license_hint=hint))
    return rules


def default_rules() -> list[DomainRule]:
    """Seed rule table shipped with the package."""
    with resources.as_file(
        resources.files("clonescope").joinpath("data/default_rules.tsv")
    ) as path:
        return load_rules(path)


def _domain_of(url: str) -> str | None:
    try:
        host = urlsplit(url).hostname
    except ValueError:
        return None
    if not host:
        return None
    host = host.lower()
    return host[4:] if host.startswith("www.") else host


def extract_links(post_body: str) -> list[SourceLink]:
    """Collect URLs cited in prose: Markdown targets, anchors, bare http(s).

    Code regions are masked first; duplicates collapse to their first
    appearance; targets without an http(s) host are skipped.
    """
    masked = list(post_body)
    for start, end in code_spans(post_body):
        for i in range(start, min(end, len(masked))):
            if masked[i] != "\n":
                masked[i] = " "
    prose = "".join(masked)

    candidates: list[tuple[int, str]] = []
    for match in _MD_LINK_RE.finditer(prose):
        candidates.append((match.start(1), match.group(1)))
    for match in _HTML_ANCHOR_RE.finditer(prose):
        candidates.append((match.start(1), match.group(1)))
    for match in _BARE_URL_RE.finditer(prose):
        candidates.append((match.start(), match.group(0).rstrip(_TRAILING_PUNCT)))
    candidates.sort(key=lambda c: c[0])

    links = []
    seen: set[str] = set()
    for _pos, url in candidates:
        if url in seen:
            continue
        seen.add(url)
        if not url.lower().startswith(("http://", "https://")):
            continue
        domain = _domain_of(url)
        if domain is None:
            logger.warning("skipping unparseable URL: %r", url)
            continue
        links.append(SourceLink(url=url, domain=domain))
    return links


def classify_source(link: SourceLink, rules: Iterable[DomainRule]) -> SourceLink:
    """Classify a link by longest-suffix domain match against the rule table."""
    best: DomainRule | None = None
    for rule in rules:
        if link.domain == rule.domain or link.domain.endswith("." + rule.domain):
            if best is None or len(rule.domain) > len(best.domain):
                best = rule
    if best is None:
        return SourceLink(url=link.url, domain=link.domain)
    return SourceLink(
        url=link.url,
        domain=link.domain,
        source_class=best.source_class,
        license_hint=best.license_hint,
    )


def analyze_origin(
    clone_set: CloneSet,
    posts: Mapping[int, Post],
    rules: Iterable[DomainRule],
) -> OriginReport:
    """Build the origin evidence for a clone set from its posts' links."""
    rules = list(rules)
    post_ids: list[int] = []
    for occ in clone_set.occurrences:
        if occ.post_id not in posts:
            raise KeyError(f"no post for occurrence post_id={occ.post_id}")
        if occ.post_id not in post_ids:
            post_ids.append(occ.post_id)

    post_links = {
        pid: tuple(classify_source(link, rules) for link in extract_links(posts[pid].body))
        for pid in post_ids
    }

    citing_posts: dict[str, set[int]] = {}
    first_link: dict[str, SourceLink] = {}
    for pid in post_ids:
        for link in post_links[pid]:
            if link.source_class == "qa_internal":
                continue
            citing_posts.setdefault(link.domain, set()).add(pid)
            first_link.setdefault(link.domain, link)
    ranked_domains = sorted(
        citing_posts, key=lambda d: (-len(citing_posts[d]), d)
    )
    candidates = tuple(first_link[d] for d in ranked_domains)
    citation_counts = {d: len(citing_posts[d]) for d in ranked_domains}

    attribution = {
        domain: {
            pid: (
                "attributed"
                if any(link.domain == domain for link in post_links[pid])
                else "unattributed"
            )
            for pid in post_ids
        }
        for domain in ranked_domains
    }

    by_author: dict[int, set[int]] = {}
    for occ in clone_set.occurrences:
        if occ.author_id is not None:
            by_author.setdefault(occ.author_id, set()).add(occ.thread_id)
    same_author_chain = any(len(threads) >= 2 for threads in by_author.values())

    return OriginReport(
        fingerprint=clone_set.fingerprint,
        key=clone_set.key,
        earliest_occurrence=clone_set.occurrences[0],
        external_candidates=candidates,
        citation_counts=citation_counts,
        same_author_chain=same_author_chain,
        attribution=attribution,
        post_links=post_links,
    )
