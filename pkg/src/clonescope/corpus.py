"""Post ingestion and code-block extraction.

Reads Q&A post corpora from JSON Lines files or Stack Exchange ``Posts.xml``
dumps and segments each post body into code blocks. Three block kinds are
recognized: fenced blocks (``` or ~~~), indented blocks (>= 4 spaces or a
tab), and HTML ``<pre><code>`` regions. Fenced and pre/code regions are
claimed left to right, whichever starts earlier; indented runs are taken
from the lines left over.
"""

from __future__ import annotations

import html
import json
import logging
import re
import xml.etree.ElementTree as ET
from bisect import bisect_left
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import IO, Iterator

logger = logging.getLogger(__name__)

PLATFORM_EPOCH = datetime(2008, 1, 1, tzinfo=timezone.utc)

POST_TYPES = ("question", "answer", "other")
BLOCK_KINDS = ("fenced", "indented", "html_pre")

_PRE_CODE_RE = re.compile(
    r"<pre\b[^>]*>\s*<code\b[^>]*>(.*?)</code>\s*</pre>",
    re.IGNORECASE | re.DOTALL,
)


class CorpusError(ValueError):
    """Malformed input record; the message names the offending line/element."""


@dataclass(frozen=True)
class Post:
    """One question or answer, with resolved thread membership."""

    post_id: int
    post_type: str
    thread_id: int
    creation_date: datetime
    body: str
    parent_id: int | None = None
    author_id: int | None = None
    score: int | None = None


@dataclass(frozen=True)
class CodeBlock:
    """A raw code block from a post body, without its delimiter syntax."""

    post_id: int
    block_index: int
    raw_content: str
    kind: str


def parse_timestamp(value: str) -> datetime:
    """Parse an ISO-8601 timestamp; naive values are taken as UTC."""
    text = value.strip()
    if text.endswith(("Z", "z")):
        text = text[:-1] + "+00:00"
    dt = datetime.fromisoformat(text)
    if dt.tzinfo is None:
        dt = dt.replace(tzinfo=timezone.utc)
    return dt.astimezone(timezone.utc)


def _check_post(post: Post, where: str) -> Post:
    if post.post_id <= 0:
        raise CorpusError(f"{where}: post_id must be positive, got {post.post_id}")
    if post.post_type == "answer" and post.parent_id is None:
        raise CorpusError(f"{where}: answer missing parent_id")
    if post.parent_id is not None and post.parent_id <= 0:
        raise CorpusError(f"{where}: parent_id must be positive, got {post.parent_id}")
    if post.creation_date < PLATFORM_EPOCH:
        raise CorpusError(
            f"{where}: creation_date {post.creation_date.isoformat()} predates "
            f"the platform epoch {PLATFORM_EPOCH.isoformat()}"
        )
    return post


def _derive_thread_id(
    post_type: str, post_id: int, parent_id: int | None, explicit: int | None
) -> int:
    if explicit is not None:
        return explicit
    if post_type == "answer" and parent_id is not None:
        return parent_id
    if post_type == "other" and parent_id is not None:
        return parent_id
    return post_id


def parse_posts(stream: IO[bytes], fmt: str) -> Iterator[Post]:
    """Yield Posts from a byte stream in input order.

    `fmt` is "jsonl" or "se_xml". Unknown post types map to "other";
    duplicate post ids and malformed records raise CorpusError naming
    the line or element.
    """
    if fmt == "jsonl":
        return _parse_jsonl(stream)
    if fmt == "se_xml":
        return _parse_se_xml(stream)
    raise ValueError(f"unknown corpus format: {fmt!r}")


def _parse_jsonl(stream: IO[bytes]) -> Iterator[Post]:
    seen: dict[int, int] = {}
    for lineno, raw_line in enumerate(stream, start=1):
        line = raw_line.decode("utf-8").strip()
        if not line:
            continue
        where = f"line {lineno}"
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorpusError(f"{where}: invalid JSON: {exc}") from exc
        if not isinstance(record, dict):
            raise CorpusError(f"{where}: expected a JSON object")
        try:
            post_id = int(record["post_id"])
            post_type = str(record["post_type"])
            created = parse_timestamp(str(record["creation_date"]))
            body = record["body"]
        except KeyError as exc:
            raise CorpusError(f"{where}: missing key {exc.args[0]!r}") from exc
        except (TypeError, ValueError) as exc:
            raise CorpusError(f"{where}: {exc}") from exc
        if not isinstance(body, str):
            raise CorpusError(f"{where}: body must be a string")
        if post_type not in ("question", "answer"):
            post_type = "other"
        parent_id = record.get("parent_id")
        parent_id = int(parent_id) if parent_id is not None else None
        explicit_thread = record.get("thread_id")
        explicit_thread = int(explicit_thread) if explicit_thread is not None else None
        author_id = record.get("author_id")
        score = record.get("score")
        if post_id in seen:
            raise CorpusError(
                f"{where}: duplicate post_id {post_id}, first seen at line {seen[post_id]}"
            )
        seen[post_id] = lineno
        post = Post(
            post_id=post_id,
            post_type=post_type,
            thread_id=_derive_thread_id(post_type, post_id, parent_id, explicit_thread),
            creation_date=created,
            body=body,
            parent_id=parent_id,
            author_id=int(author_id) if author_id is not None else None,
            score=int(score) if score is not None else None,
        )
        yield _check_post(post, where)


_SE_POST_TYPES = {"1": "question", "2": "answer"}


def _parse_se_xml(stream: IO[bytes]) -> Iterator[Post]:
    seen: dict[int, int] = {}
    ordinal = 0
    try:
        for _event, elem in ET.iterparse(stream, events=("end",)):
            if elem.tag != "row":
                continue
            ordinal += 1
            attrs = elem.attrib
            where = f"row {ordinal}" + (f" (Id={attrs['Id']})" if "Id" in attrs else "")
            try:
                post_id = int(attrs["Id"])
                created = parse_timestamp(attrs["CreationDate"])
            except KeyError as exc:
                raise CorpusError(f"{where}: missing attribute {exc.args[0]!r}") from exc
            except ValueError as exc:
                raise CorpusError(f"{where}: {exc}") from exc
            post_type = _SE_POST_TYPES.get(attrs.get("PostTypeId", ""), "other")
            parent_id = int(attrs["ParentId"]) if "ParentId" in attrs else None
            if post_id in seen:
                raise CorpusError(
                    f"{where}: duplicate post_id {post_id}, first seen at row {seen[post_id]}"
                )
            seen[post_id] = ordinal
            post = Post(
                post_id=post_id,
                post_type=post_type,
                thread_id=_derive_thread_id(post_type, post_id, parent_id, None),
                creation_date=created,
                body=attrs.get("Body", ""),
                parent_id=parent_id,
                author_id=int(attrs["OwnerUserId"]) if "OwnerUserId" in attrs else None,
                score=int(attrs["Score"]) if "Score" in attrs else None,
            )
            yield _check_post(post, where)
    except ET.ParseError as exc:
        raise CorpusError(f"invalid XML: {exc}") from exc


def _is_blank(line: str) -> bool:
    return not line.strip()


def _is_fence(line: str) -> str | None:
    text = line.rstrip("\r")
    if text.startswith("```"):
        return "```"
    if text.startswith("~~~"):
        return "~~~"
    return None


def _dedent(line: str) -> str:
    if line.startswith("    "):
        return line[4:]
    if line.startswith("\t"):
        return line[1:]
    return line


def _segment_body(body: str, where: str = "body") -> list[tuple[int, int, str, str]]:
    """Split a body into code regions: (start, end, raw_content, kind).

    Fenced and pre/code regions are claimed left to right, earliest
    start first; indented runs come from the uncovered lines. Spans
    cover the delimiter syntax, raw_content excludes it.
    """
    lines = body.split("\n")
    n = len(lines)
    # char offset of each line start, for document-order sorting
    offsets = [0] * n
    for i in range(1, n):
        offsets[i] = offsets[i - 1] + len(lines[i - 1]) + 1

    regions: list[tuple[int, int, str, str]] = []
    pre_matches = list(_PRE_CODE_RE.finditer(body))

    def next_fence_line(pos: int) -> int | None:
        for i in range(bisect_left(offsets, pos), n):
            if _is_fence(lines[i]):
                return i
        return None

    # claim fenced and pre/code regions left to right, earliest start wins
    pos = 0
    pre_idx = 0
    while True:
        while pre_idx < len(pre_matches) and pre_matches[pre_idx].start() < pos:
            pre_idx += 1
        pre_m = pre_matches[pre_idx] if pre_idx < len(pre_matches) else None
        fence_line = next_fence_line(pos)
        if pre_m is None and fence_line is None:
            break
        fence_off = offsets[fence_line] if fence_line is not None else None
        if pre_m is not None and (fence_off is None or pre_m.start() < fence_off):
            regions.append(
                (pre_m.start(), pre_m.end(), html.unescape(pre_m.group(1)), "html_pre")
            )
            pos = pre_m.end()
            pre_idx += 1
            continue
        kind = _is_fence(lines[fence_line])
        close = None
        for i in range(fence_line + 1, n):
            if _is_fence(lines[i]) == kind:
                close = i
                break
        if close is None:
            logger.warning(
                "%s: unterminated %s fence at line %d", where, kind, fence_line + 1
            )
            close = n
        content = "\n".join(line.rstrip("\r") for line in lines[fence_line + 1 : close])
        end_off = len(body) if close >= n else offsets[close] + len(lines[close])
        regions.append((offsets[fence_line], end_off, content, "fenced"))
        pos = end_off + 1

    claimed = [False] * n
    for r_start, r_end, _raw, _kind in regions:
        for i in range(bisect_left(offsets, r_start + 1) - 1, n):
            if offsets[i] >= r_end:
                break
            if offsets[i] + len(lines[i]) > r_start:
                claimed[i] = True

    # indented runs over unclaimed lines
    i = 0
    while i < n:
        line = lines[i]
        if claimed[i] or _is_blank(line) or not (line.startswith("    ") or line.startswith("\t")):
            i += 1
            continue
        start = i
        while (
            i < n
            and not claimed[i]
            and not _is_blank(lines[i])
            and (lines[i].startswith("    ") or lines[i].startswith("\t"))
        ):
            i += 1
        end = i  # exclusive
        before_ok = start == 0 or _is_blank(lines[start - 1])
        after_ok = end == n or _is_blank(lines[end])
        if before_ok and after_ok:
            content = "\n".join(_dedent(line.rstrip("\r")) for line in lines[start:end])
            end_off = offsets[end - 1] + len(lines[end - 1])
            regions.append((offsets[start], end_off, content, "indented"))

    regions.sort(key=lambda r: r[0])
    return regions


def code_spans(body: str) -> list[tuple[int, int]]:
    """Character ranges of all code regions in a body, delimiters included."""
    return [(start, end) for start, end, _raw, _kind in _segment_body(body)]


def extract_code_blocks(post: Post) -> list[CodeBlock]:
    """Extract code blocks from a post body in document order.

    An unterminated fence swallows the rest of the body and logs a
    warning. Indented runs count only when set off from surrounding
    prose by blank lines (or the body boundary). Inline single-backtick
    spans are never blocks.
    """
    return [
        CodeBlock(post_id=post.post_id, block_index=idx, raw_content=raw, kind=kind)
        for idx, (_start, _end, raw, kind) in enumerate(
            _segment_body(post.body, where=f"post {post.post_id}")
        )
    ]
