"""Guard the bundled corpus against drift from its generator."""

import json

import planted
from conftest import DATA_DIR


def test_bundled_corpus_matches_generator():
    records, manifest = planted.build()
    regenerated = "".join(json.dumps(r, ensure_ascii=False) + "\n" for r in records)
    assert (DATA_DIR / "planted_corpus.jsonl").read_text(encoding="utf-8") == regenerated
    bundled = json.loads((DATA_DIR / "planted_manifest.json").read_text(encoding="utf-8"))
    assert bundled == manifest


def test_manifest_covers_required_shape():
    manifest = json.loads((DATA_DIR / "planted_manifest.json").read_text(encoding="utf-8"))
    planted_groups = [s for s in manifest["sets"] if s["role"] == "planted"]
    decoys = [s for s in manifest["sets"] if s["role"] == "decoy"]
    assert len(planted_groups) >= 10
    assert len(decoys) >= 2
    nlocs = {s["nloc"] for s in planted_groups}
    assert min(nlocs) == 3 and max(nlocs) == 60
    thread_counts = {len(s["thread_ids"]) for s in planted_groups}
    assert {1, 2, 3, 4, 5} <= thread_counts
    assert 150 <= manifest["counts"]["posts"] <= 260
    assert 45 <= manifest["counts"]["threads"] <= 80
