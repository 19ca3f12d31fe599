"""Whitespace normalization, line counting, and fingerprinting of code blocks.

All functions here are pure and deterministic; the fingerprint is bit-exact
across runs, platforms, and implementations.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .corpus import CodeBlock

FNV64_OFFSET_BASIS = 0xCBF29CE484222325
FNV64_PRIME = 0x100000001B3
_U64_MASK = 0xFFFFFFFFFFFFFFFF

# Only ASCII letters and digits survive projection; everything else
# (punctuation, whitespace, non-ASCII) is dropped.
_NON_ALNUM_RE = re.compile(r"[^0-9A-Za-z]+")

_BRACKET_CHARS = set("()[]{}")


@dataclass(frozen=True)
class NormalizedSnippet:
    """A code block after normalization, with its derived identity keys."""

    content: str
    nloc: int
    projection: str
    fingerprint: int


def normalize(raw: str) -> str:
    """Normalize whitespace and structural noise in a code block.

    In order: convert CRLF/CR to LF, strip trailing whitespace per line,
    drop lines consisting only of brackets ``()[]{}``, drop blank lines
    (collapsing newline runs), and strip leading/trailing newlines.
    Idempotent; total over arbitrary text.
    """
    text = raw.replace("\r\n", "\n").replace("\r", "\n")
    kept = []
    for line in text.split("\n"):
        line = line.rstrip()
        if not line:
            continue
        nonspace = {c for c in line if not c.isspace()}
        if nonspace and nonspace <= _BRACKET_CHARS:
            continue
        kept.append(line)
    return "\n".join(kept)


def nloc(normalized: str) -> int:
    """Count lines of normalized content; empty content has zero lines."""
    if not normalized:
        return 0
    return normalized.count("\n") + 1


def project_alnum(text: str) -> str:
    """Return only the ASCII alphanumeric characters of `text`, in order."""
    return _NON_ALNUM_RE.sub("", text)


def fingerprint(projection: str) -> int:
    """FNV-1a 64-bit hash over the UTF-8 bytes of `projection`.

    Returns the offset basis (0xcbf29ce484222325) for empty input.
    """
    h = FNV64_OFFSET_BASIS
    for byte in projection.encode("utf-8"):
        h = ((h ^ byte) * FNV64_PRIME) & _U64_MASK
    return h


def process_block(block: CodeBlock) -> NormalizedSnippet:
    """Normalize a code block and derive its line count, projection, and hash."""
    content = normalize(block.raw_content)
    projection = project_alnum(content)
    return NormalizedSnippet(
        content=content,
        nloc=nloc(content),
        projection=projection,
        fingerprint=fingerprint(projection),
    )
