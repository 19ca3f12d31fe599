// Wire types for the analysis service API.

export interface CloneSetListItem {
  key: string;
  fingerprint: string;
  nloc: number;
  thread_count: number;
  occurrence_count: number;
}

export interface CloneSetListPage {
  total: number;
  page: number;
  per_page: number;
  items: CloneSetListItem[];
}

export interface OccurrenceDoc {
  post_id: number;
  thread_id: number;
  block_index: number;
  creation_date: string;
  author_id: number | null;
}

export interface LinkDoc {
  url: string;
  domain: string;
  source_class: string;
  license_hint: string | null;
}

export interface CandidateDoc extends LinkDoc {
  cited_by_posts: number;
}

export interface CloneSetDetail {
  fingerprint: string;
  key: string;
  content: string;
  nloc: number;
  thread_count: number;
  occurrences: OccurrenceDoc[];
  links: Record<string, { internal: LinkDoc[]; external: LinkDoc[] }>;
  origin: {
    earliest_occurrence: OccurrenceDoc;
    external_candidates: CandidateDoc[];
    same_author_chain: boolean;
  };
  attribution: Record<string, Record<string, string>>;
}

export interface LabelDraft {
  category: string;
  origin_verdict: string;
  license_conflict: boolean;
  notes: string;
  analyst: string;
}

export interface LabelRecord extends LabelDraft {
  fingerprint: string;
  created_at: string;
}

export interface ListFilters {
  min_nloc: number;
  min_threads: number;
  page: number;
  per_page: number;
}
