"""Independent reference implementations used to check the main code paths.

Everything here is deliberately written the straightforward way (explicit
loops, all-pairs comparisons) and shares no code with the package.
"""

from __future__ import annotations

import math
import random
from datetime import datetime, timedelta, timezone

_ALNUM = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz"


def oracle_normalize(text: str) -> str:
    text = text.replace("\r\n", "\n").replace("\r", "\n")
    kept = []
    for line in text.split("\n"):
        line = line.rstrip()
        core = "".join(ch for ch in line if not ch.isspace())
        if not core:
            continue
        if all(ch in "()[]{}" for ch in core):
            continue
        kept.append(line)
    return "\n".join(kept)


def oracle_projection(text: str) -> str:
    return "".join(ch for ch in text if ch in _ALNUM)


def brute_force_groups(blocks: list[tuple[object, str]]) -> set[frozenset]:
    """All-pairs projection-equality grouping of (block_id, raw_text) pairs.

    Blocks whose normalized form is empty are dropped first.
    """
    usable = [
        (block_id, oracle_projection(oracle_normalize(raw)))
        for block_id, raw in blocks
        if oracle_normalize(raw) != ""
    ]
    n = len(usable)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(n):
        for j in range(i + 1, n):
            if usable[i][1] == usable[j][1]:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[rj] = ri

    groups: dict[int, set] = {}
    for i in range(n):
        groups.setdefault(find(i), set()).add(usable[i][0])
    return {frozenset(g) for g in groups.values()}


def ref_mean(values) -> float:
    return sum(values) / len(values)


def ref_sample_sd(values) -> float:
    m = ref_mean(values)
    return math.sqrt(sum((v - m) ** 2 for v in values) / (len(values) - 1))


def ref_quantile_type7(values, p: float) -> float:
    s = sorted(values)
    h = (len(s) - 1) * p
    lo = math.floor(h)
    hi = min(lo + 1, len(s) - 1)
    return s[lo] + (h - lo) * (s[hi] - s[lo])


# --- random corpora for oracle-equivalence runs -----------------------------

_SNIPPET_POOL = (
    "alpha = beta + 1;\nreturn alpha;",
    "for (i = 0; i < n; i++) {\n    total += v[i];\n}",
    "print('hello')\nprint('bye')",
    "x=1",
    "if ok:\n    go()\nelse:\n    stop()",
    "?????",
    "(((",
    "config:\n  depth: 3\n  wide: true",
)

_DECOR = ("", "\n\n", "   ", "\t", "\r\n", "()\n", "{}\n", " \n ")

_DATES = [
    datetime(2012, 4, 1, tzinfo=timezone.utc) + timedelta(days=d) for d in range(5)
]


def random_raw_block(rng: random.Random) -> str:
    if rng.random() < 0.55:
        base = rng.choice(_SNIPPET_POOL)
        return rng.choice(_DECOR) + base + rng.choice(_DECOR)
    length = rng.randint(0, 30)
    charset = "ab1 ;(){}[]\n\tλé?"
    return "".join(rng.choice(charset) for _ in range(length))


def random_block_corpus(rng: random.Random) -> list[dict]:
    """Blocks with post/thread structure: post_id, thread_id, block_index,
    creation_date, author_id, raw."""
    n_blocks = rng.randint(0, 50)
    blocks = []
    post_blocks: dict[int, int] = {}
    for _ in range(n_blocks):
        post_id = rng.randint(1, 20)
        index = post_blocks.get(post_id, 0)
        post_blocks[post_id] = index + 1
        blocks.append(
            {
                "post_id": post_id,
                "thread_id": (post_id % rng.randint(1, 8)) + 1,
                "block_index": index,
                "creation_date": rng.choice(_DATES),
                "author_id": rng.choice((None, 1, 2, 3)),
                "raw": random_raw_block(rng),
            }
        )
    # one thread id per post
    thread_of: dict[int, int] = {}
    for b in blocks:
        thread_of.setdefault(b["post_id"], b["thread_id"])
        b["thread_id"] = thread_of[b["post_id"]]
    return blocks
