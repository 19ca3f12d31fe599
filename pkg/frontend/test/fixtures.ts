import type { CloneSetDetail, CloneSetListPage, LabelRecord } from "../src/types.js";

export const DETAIL: CloneSetDetail = {
  fingerprint: "cbf29ce484222325",
  key: "cbf29ce484222325",
  content: 'int ga_v0 = load_ga(1);\nif (ga_v0 > 4) run_ga(1);\nemit("ga", ga_v1);',
  nloc: 3,
  thread_count: 2,
  occurrences: [
    {
      post_id: 101,
      thread_id: 100,
      block_index: 0,
      creation_date: "2016-09-16T00:00:00Z",
      author_id: 13,
    },
    {
      post_id: 201,
      thread_id: 200,
      block_index: 1,
      creation_date: "2017-01-01T08:30:00Z",
      author_id: null,
    },
    {
      post_id: 300,
      thread_id: 300,
      block_index: 0,
      creation_date: "2018-08-27T12:00:00Z",
      author_id: 13,
    },
  ],
  links: {
    "101": {
      internal: [
        {
          url: "https://stackoverflow.com/a/39532855",
          domain: "stackoverflow.com",
          source_class: "qa_internal",
          license_hint: "CC BY-SA",
        },
      ],
      external: [
        {
          url: "https://developer.android.com/training/articles/security-ssl.html",
          domain: "developer.android.com",
          source_class: "reference_doc",
          license_hint: "CC BY 2.5",
        },
      ],
    },
    "201": { internal: [], external: [] },
    "300": { internal: [], external: [] },
  },
  origin: {
    earliest_occurrence: {
      post_id: 101,
      thread_id: 100,
      block_index: 0,
      creation_date: "2016-09-16T00:00:00Z",
      author_id: 13,
    },
    external_candidates: [
      {
        url: "https://developer.android.com/training/articles/security-ssl.html",
        domain: "developer.android.com",
        source_class: "reference_doc",
        license_hint: "CC BY 2.5",
        cited_by_posts: 1,
      },
    ],
    same_author_chain: true,
  },
  attribution: {
    "developer.android.com": {
      "101": "attributed",
      "201": "unattributed",
      "300": "unattributed",
    },
  },
};

export const LABELS: LabelRecord[] = [
  {
    fingerprint: "cbf29ce484222325",
    category: "source_code",
    origin_verdict: "external_copy",
    license_conflict: true,
    notes: "matches the docs page",
    analyst: "a1",
    created_at: "2024-05-01T10:00:00Z",
  },
];

export const LIST_PAGE: CloneSetListPage = {
  total: 5,
  page: 1,
  per_page: 3,
  items: [
    { key: "aa00000000000001", fingerprint: "aa00000000000001", nloc: 60, thread_count: 5, occurrence_count: 6 },
    { key: "aa00000000000002", fingerprint: "aa00000000000002", nloc: 30, thread_count: 3, occurrence_count: 3 },
    { key: "aa00000000000003", fingerprint: "aa00000000000003", nloc: 22, thread_count: 2, occurrence_count: 2 },
  ],
};
