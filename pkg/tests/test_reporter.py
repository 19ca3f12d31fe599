import json
from datetime import datetime, timedelta, timezone

import pytest

from clonescope.cloneindex import CloneSet, CloneStats, Occurrence, compute_stats
from clonescope.linkanalysis import OriginReport, SourceLink
from clonescope.reporter import (
    export_clone_set,
    load_clone_set,
    load_histogram,
    load_summary,
    parse_occurrence_doc,
    write_histogram,
    write_summary,
)

T0 = datetime(2016, 9, 16, tzinfo=timezone.utc)


def _mkset(fp, nloc, thread_ids):
    occs = tuple(
        Occurrence(post_id=i + 1, thread_id=t, block_index=0,
                   creation_date=T0 + timedelta(days=i), author_id=None)
        for i, t in enumerate(sorted(thread_ids))
    )
    return CloneSet(
        fingerprint=fp, content="x();", nloc=nloc, projection="x",
        occurrences=occs, thread_ids=frozenset(thread_ids),
    )


def _stats(sets, min_nloc=0):
    return compute_stats(sets, min_nloc=min_nloc)


def test_summary_fields_and_rounding(tmp_path):
    sets = [_mkset(1, 30, {1, 2})] + [_mkset(i + 10, 3, {i + 10}) for i in range(5)]
    stats = _stats(sets)
    path = write_summary(stats, tmp_path / "summary.json", min_nloc=0)
    doc = json.loads(path.read_text())
    assert doc["distinct_fingerprints"] == 6
    assert doc["cloned_fingerprints"] == 1
    assert abs(doc["cloned_fraction"] - 1 / 6) < 1e-12
    assert doc["rounded"]["cloned_fraction"] == "16.7%"
    assert doc["run"]["min_nloc"] == 0
    assert doc["run"]["tool_version"]


def test_summary_round_trip(tmp_path):
    sets = [_mkset(i, 10 + i, set(range(1, 2 + (i % 3)))) for i in range(8)]
    stats = _stats(sets, min_nloc=6)
    path = write_summary(
        stats, tmp_path / "s.json", min_nloc=6, corpus_digest="abc123"
    )
    loaded, run = load_summary(path)
    assert loaded == stats
    assert run["corpus_digest"] == "abc123"


def test_summary_empty_corpus_is_valid(tmp_path):
    stats = _stats([], min_nloc=20)
    path = write_summary(stats, tmp_path / "s.json", min_nloc=20)
    doc = json.loads(path.read_text())
    assert doc["distinct_fingerprints"] == 0
    assert doc["nloc_mean"] is None
    assert doc["rounded"]["nloc_mean"] is None
    loaded, _run = load_summary(path)
    assert loaded == stats


def test_histogram_rows_ascending(tmp_path):
    sets = [_mkset(1, 30, {1, 2}), _mkset(2, 30, {3, 4}), _mkset(3, 25, {5, 6, 7})]
    stats = _stats(sets)
    path = write_histogram(stats, tmp_path / "h.csv")
    assert path.read_text() == "thread_count,clone_set_count\n2,2\n3,1\n"
    assert load_histogram(path) == {2: 2, 3: 1}


def test_histogram_empty_header_only(tmp_path):
    path = write_histogram(_stats([], min_nloc=20), tmp_path / "h.csv")
    assert path.read_text() == "thread_count,clone_set_count\n"


def test_histogram_unordered_input_rows_sorted(tmp_path):
    stats = CloneStats(
        distinct_fingerprints=5, cloned_fingerprints=5, cloned_fraction=1.0,
        filtered_count_by_threshold={}, nloc_mean=None, nloc_sd=None,
        nloc_median=None, nloc_iqr=None, thread_mean=None, thread_sd=None,
        thread_median=None, thread_iqr=None, pct_more_than_two_threads=None,
        thread_count_histogram={5: 1, 2: 4},
    )
    path = write_histogram(stats, tmp_path / "h.csv")
    assert path.read_text().splitlines()[1:] == ["2,4", "5,1"]


def _origin_for(clone_set):
    link = SourceLink(
        url="https://www.androidhive.info/x",
        domain="androidhive.info",
        source_class="tutorial_site",
        license_hint="restrictive terms of use",
    )
    internal = SourceLink(
        url="https://stackoverflow.com/a/1",
        domain="stackoverflow.com",
        source_class="qa_internal",
        license_hint="CC BY-SA",
    )
    first = clone_set.occurrences[0].post_id
    return OriginReport(
        fingerprint=clone_set.fingerprint,
        key=clone_set.key,
        earliest_occurrence=clone_set.occurrences[0],
        external_candidates=(link,),
        citation_counts={"androidhive.info": 1},
        same_author_chain=True,
        attribution={
            "androidhive.info": {
                o.post_id: "attributed" if o.post_id == first else "unattributed"
                for o in clone_set.occurrences
            }
        },
        post_links={first: (link, internal)},
    )


def test_export_formats_fingerprint_as_16_hex_digits(tmp_path):
    cs = _mkset(0xCBF29CE484222325, 3, {1, 2})
    path = export_clone_set(cs, _origin_for(cs), tmp_path / "cs.json")
    doc = load_clone_set(path)
    assert doc["fingerprint"] == "cbf29ce484222325"
    small = _mkset(0x2A, 3, {1, 2})
    path2 = export_clone_set(small, _origin_for(small), tmp_path / "cs2.json")
    assert load_clone_set(path2)["fingerprint"] == "000000000000002a"


def test_export_occurrences_sorted_by_creation_date(tmp_path):
    cs = _mkset(9, 4, {1, 2, 3})
    path = export_clone_set(cs, _origin_for(cs), tmp_path / "cs.json")
    doc = load_clone_set(path)
    dates = [o["creation_date"] for o in doc["occurrences"]]
    assert dates == sorted(dates)
    assert doc["occurrences"][0]["creation_date"] == "2016-09-16T00:00:00Z"


def test_export_splits_internal_and_external_links(tmp_path):
    cs = _mkset(9, 4, {1, 2})
    origin = _origin_for(cs)
    doc = load_clone_set(export_clone_set(cs, origin, tmp_path / "cs.json"))
    first = str(cs.occurrences[0].post_id)
    assert [l["domain"] for l in doc["links"][first]["external"]] == ["androidhive.info"]
    assert [l["domain"] for l in doc["links"][first]["internal"]] == ["stackoverflow.com"]
    assert doc["origin"]["external_candidates"][0]["cited_by_posts"] == 1
    assert doc["origin"]["same_author_chain"] is True


def test_export_round_trip_reconstructs_occurrences(tmp_path):
    cs = _mkset(77, 4, {1, 2, 3})
    doc = load_clone_set(export_clone_set(cs, _origin_for(cs), tmp_path / "cs.json"))
    rebuilt = tuple(parse_occurrence_doc(o) for o in doc["occurrences"])
    assert rebuilt == cs.occurrences
    assert doc["content"] == cs.content
    assert doc["nloc"] == cs.nloc
    assert int(doc["fingerprint"], 16) == cs.fingerprint


def test_export_rejects_mismatched_origin(tmp_path):
    cs = _mkset(1, 3, {1, 2})
    other = _mkset(2, 3, {1, 2})
    target = tmp_path / "cs.json"
    with pytest.raises(ValueError, match="different fingerprints"):
        export_clone_set(cs, _origin_for(other), target)
    assert not target.exists()


def test_outputs_mutually_consistent(planted_run):
    """Histogram mass equals the number of exported sets at the same thresholds."""
    exported = list((planted_run.out_dir / "clone-sets").glob("*.json"))
    histogram = load_histogram(planted_run.out_dir / "histogram.csv")
    assert sum(histogram.values()) == len(exported)
    stats, run_meta = load_summary(planted_run.out_dir / "summary.json")
    assert stats.thread_count_histogram == histogram
    assert run_meta["corpus_digest"] == planted_run.corpus_digest
