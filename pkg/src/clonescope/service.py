"""Local HTTP service over an analysis output directory, with analyst labels.

Read endpoints are pure views of the exported documents; labels are an
append-only JSONL history made durable before each write is acknowledged.
"""

from __future__ import annotations

import json
import os
import threading
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Literal

from fastapi import FastAPI, HTTPException, Query, Response
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

ORIGIN_VERDICTS = ("internal_original", "external_copy", "undecided")

# suggested label categories; the vocabulary stays free-form
CATEGORY_SEED = (
    "source_code",
    "configuration_file",
    "gui_definition",
    "data_example",
    "html",
    "non_code",
)

_LABEL_REQUIRED_KEYS = ("fingerprint", "category", "origin_verdict", "created_at")


class LabelStoreError(ValueError):
    """Corrupt label store; the message names the offending record."""


class LabelDraft(BaseModel):
    category: str = Field(min_length=1)
    origin_verdict: Literal["internal_original", "external_copy", "undecided"] = "undecided"
    license_conflict: bool = False
    notes: str = ""
    analyst: str = ""


class LabelStore:
    """Append-only JSONL store of analyst labels.

    Existing records are validated on open; appends are flushed and
    fsynced before they are reported as stored.
    """

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._lock = threading.Lock()
        self._labels: list[dict[str, Any]] = []
        self._last_created_at = ""
        if self.path.exists():
            self._load()

    def _load(self) -> None:
        with self.path.open(encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    record = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise LabelStoreError(
                        f"{self.path}: line {lineno}: invalid JSON: {exc}"
                    ) from exc
                if not isinstance(record, dict):
                    raise LabelStoreError(
                        f"{self.path}: line {lineno}: expected an object"
                    )
                missing = [k for k in _LABEL_REQUIRED_KEYS if k not in record]
                if missing:
                    raise LabelStoreError(
                        f"{self.path}: line {lineno}: missing keys {missing}"
                    )
                if record["origin_verdict"] not in ORIGIN_VERDICTS:
                    raise LabelStoreError(
                        f"{self.path}: line {lineno}: "
                        f"invalid origin_verdict {record['origin_verdict']!r}"
                    )
                self._labels.append(record)
                self._last_created_at = max(self._last_created_at, record["created_at"])

    def append(self, fingerprint_key: str, draft: LabelDraft) -> dict[str, Any]:
        with self._lock:
            now = datetime.now(timezone.utc).isoformat().replace("+00:00", "Z")
            created_at = max(now, self._last_created_at)
            record = {
                "fingerprint": fingerprint_key,
                "category": draft.category,
                "origin_verdict": draft.origin_verdict,
                "license_conflict": draft.license_conflict,
                "notes": draft.notes,
                "analyst": draft.analyst,
                "created_at": created_at,
            }
            line = json.dumps(record, ensure_ascii=False) + "\n"
            with self.path.open("a", encoding="utf-8") as fh:
                fh.write(line)
                fh.flush()
                os.fsync(fh.fileno())
            self._labels.append(record)
            self._last_created_at = created_at
            return record

    def all(self) -> list[dict[str, Any]]:
        return sorted(self._labels, key=lambda r: r["created_at"])

    def for_key(self, fingerprint_key: str) -> list[dict[str, Any]]:
        return [r for r in self.all() if r["fingerprint"] == fingerprint_key]


def _load_data_dir(data_dir: Path) -> tuple[bytes, list[dict[str, Any]], dict[str, bytes]]:
    summary_path = data_dir / "summary.json"
    if not summary_path.exists():
        raise FileNotFoundError(f"no summary.json in {data_dir}")
    summary_bytes = summary_path.read_bytes()

    payloads: list[dict[str, Any]] = []
    raw_by_key: dict[str, bytes] = {}
    sets_dir = data_dir / "clone-sets"
    if sets_dir.is_dir():
        for path in sorted(sets_dir.glob("*.json")):
            raw = path.read_bytes()
            doc = json.loads(raw)
            payloads.append(doc)
            raw_by_key[doc["key"]] = raw
    payloads.sort(
        key=lambda d: (
            -d["thread_count"],
            -d["nloc"],
            int(d["fingerprint"], 16),
            d["content"],
        )
    )
    return summary_bytes, payloads, raw_by_key


def create_app(
    data_dir: str | Path,
    labels_path: str | Path,
    ui_dir: str | Path | None = None,
) -> FastAPI:
    """Build the API over an analysis output directory.

    Raises LabelStoreError when the label store is corrupt and
    FileNotFoundError when the data directory is incomplete.
    """
    summary_bytes, payloads, raw_by_key = _load_data_dir(Path(data_dir))
    store = LabelStore(labels_path)
    app = FastAPI(title="clonescope", docs_url=None, redoc_url=None)

    @app.get("/api/stats")
    def stats() -> Response:
        return Response(content=summary_bytes, media_type="application/json")

    @app.get("/api/clone-sets")
    def list_clone_sets(
        response: Response,
        min_nloc: int = Query(default=20, ge=0),
        min_threads: int = Query(default=2, ge=1),
        page: int = Query(default=1, ge=1),
        per_page: int = Query(default=50, ge=1, le=200),
    ) -> dict[str, Any]:
        matching = [
            d for d in payloads
            if d["nloc"] >= min_nloc and d["thread_count"] >= min_threads
        ]
        start = (page - 1) * per_page
        items = [
            {
                "key": d["key"],
                "fingerprint": d["fingerprint"],
                "nloc": d["nloc"],
                "thread_count": d["thread_count"],
                "occurrence_count": len(d["occurrences"]),
            }
            for d in matching[start : start + per_page]
        ]
        response.headers["X-Total-Count"] = str(len(matching))
        return {
            "total": len(matching),
            "page": page,
            "per_page": per_page,
            "items": items,
        }

    @app.get("/api/clone-sets/{key}")
    def clone_set_detail(key: str) -> Response:
        raw = raw_by_key.get(key)
        if raw is None:
            raise HTTPException(status_code=404, detail=f"unknown clone set {key!r}")
        return Response(content=raw, media_type="application/json")

    @app.get("/api/clone-sets/{key}/labels")
    def labels_for(key: str) -> dict[str, Any]:
        if key not in raw_by_key:
            raise HTTPException(status_code=404, detail=f"unknown clone set {key!r}")
        return {"labels": store.for_key(key)}

    @app.post("/api/clone-sets/{key}/labels", status_code=201)
    def post_label(key: str, draft: LabelDraft) -> dict[str, Any]:
        if key not in raw_by_key:
            raise HTTPException(status_code=404, detail=f"unknown clone set {key!r}")
        return store.append(key, draft)

    @app.get("/api/labels")
    def all_labels() -> dict[str, Any]:
        return {"labels": store.all()}

    if ui_dir is not None and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app


def run_server(app: FastAPI, host: str, port: int, log_level: str = "warning") -> None:
    import uvicorn

    uvicorn.run(app, host=host, port=port, log_level=log_level)
