// DOM builders for the two views. All values shown come verbatim from the
// API payloads; builders never compute derived statistics.

import type {
  CloneSetDetail,
  CloneSetListPage,
  LabelDraft,
  LabelRecord,
  ListFilters,
} from "./types.js";
import { CATEGORY_SUGGESTIONS, ORIGIN_VERDICTS } from "./validate.js";

export interface ListHandlers {
  onOpen: (key: string) => void;
  onPage: (page: number) => void;
}

export interface DetailHandlers {
  onSubmit: (draft: LabelDraft) => void;
  onBack: () => void;
}

function el<K extends keyof HTMLElementTagNameMap>(
  doc: Document,
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = doc.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function postUrl(postId: number, threadId: number): string {
  return postId === threadId
    ? `https://stackoverflow.com/q/${postId}`
    : `https://stackoverflow.com/a/${postId}`;
}

export function renderErrorBanner(doc: Document, message: string): HTMLElement {
  const banner = el(doc, "div", "banner error");
  banner.setAttribute("role", "alert");
  banner.textContent = message;
  return banner;
}

export function renderListView(
  doc: Document,
  page: CloneSetListPage,
  labelCounts: Map<string, number>,
  filters: ListFilters,
  handlers: ListHandlers,
): HTMLElement {
  const root = el(doc, "section", "list-view");
  if (page.items.length === 0) {
    root.appendChild(el(doc, "p", "placeholder", "no clone sets match"));
  } else {
    const table = el(doc, "table", "clone-sets");
    const head = el(doc, "tr");
    for (const title of ["fingerprint", "nloc", "threads", "occurrences", "labels"]) {
      head.appendChild(el(doc, "th", undefined, title));
    }
    table.appendChild(head);
    for (const item of page.items) {
      const row = el(doc, "tr", "clone-set-row");
      row.dataset.key = item.key;
      const fpCell = el(doc, "td");
      const link = el(doc, "a", "fingerprint", item.fingerprint);
      link.href = `#/set/${item.key}`;
      link.addEventListener("click", (event) => {
        event.preventDefault();
        handlers.onOpen(item.key);
      });
      fpCell.appendChild(link);
      row.appendChild(fpCell);
      row.appendChild(el(doc, "td", "num", String(item.nloc)));
      row.appendChild(el(doc, "td", "num", String(item.thread_count)));
      row.appendChild(el(doc, "td", "num", String(item.occurrence_count)));
      const count = labelCounts.get(item.key) ?? 0;
      row.appendChild(
        el(doc, "td", "labels", count > 0 ? `${count} label${count > 1 ? "s" : ""}` : "—"),
      );
      table.appendChild(row);
    }
    root.appendChild(table);
  }

  const pager = el(doc, "nav", "pager");
  const prev = el(doc, "button", "prev", "previous");
  prev.disabled = filters.page <= 1;
  prev.addEventListener("click", () => handlers.onPage(filters.page - 1));
  const next = el(doc, "button", "next", "next");
  next.disabled = filters.page * filters.per_page >= page.total;
  next.addEventListener("click", () => handlers.onPage(filters.page + 1));
  pager.appendChild(prev);
  pager.appendChild(
    el(doc, "span", "page-info", `page ${filters.page} · ${page.total} sets`),
  );
  pager.appendChild(next);
  root.appendChild(pager);
  return root;
}

function renderSnippet(doc: Document, detail: CloneSetDetail): HTMLElement {
  const wrap = el(doc, "div", "snippet");
  const gutter = el(doc, "pre", "gutter");
  const lineCount = detail.content === "" ? 0 : detail.content.split("\n").length;
  gutter.textContent = Array.from({ length: lineCount }, (_v, i) => String(i + 1)).join(
    "\n",
  );
  const pre = el(doc, "pre", "code");
  const code = el(doc, "code");
  code.dataset.field = "content";
  code.textContent = detail.content;
  pre.appendChild(code);
  wrap.appendChild(gutter);
  wrap.appendChild(pre);
  return wrap;
}

function renderOccurrences(doc: Document, detail: CloneSetDetail): HTMLElement {
  const section = el(doc, "section", "occurrences");
  section.appendChild(el(doc, "h3", undefined, "posts (by creation date)"));
  const list = el(doc, "ol");
  for (const occ of detail.occurrences) {
    const item = el(doc, "li", "occurrence");
    const link = el(doc, "a", "post-link");
    link.href = postUrl(occ.post_id, occ.thread_id);
    link.target = "_blank";
    link.rel = "noopener";
    link.dataset.field = "occ-post";
    link.textContent = String(occ.post_id);
    item.appendChild(link);
    const date = el(doc, "span", "occ-date");
    date.dataset.field = "occ-date";
    date.textContent = occ.creation_date;
    item.appendChild(date);
    item.appendChild(
      el(doc, "span", "occ-meta", `thread ${occ.thread_id} · block ${occ.block_index}`),
    );
    if (occ.author_id !== null) {
      item.appendChild(el(doc, "span", "occ-author", `author ${occ.author_id}`));
    }
    const attributedFor: string[] = [];
    for (const [domain, perPost] of Object.entries(detail.attribution)) {
      if (perPost[String(occ.post_id)] === "attributed") attributedFor.push(domain);
    }
    for (const domain of attributedFor) {
      const badge = el(doc, "span", "badge attributed", `attributes ${domain}`);
      badge.dataset.field = "attribution-badge";
      item.appendChild(badge);
    }
    list.appendChild(item);
  }
  section.appendChild(list);
  return section;
}

function renderLinks(doc: Document, detail: CloneSetDetail): HTMLElement {
  const section = el(doc, "section", "links");
  const internal = el(doc, "div", "internal-links");
  internal.appendChild(el(doc, "h3", undefined, "linked posts"));
  const internalList = el(doc, "ul");
  let internalCount = 0;
  for (const [postId, links] of Object.entries(detail.links)) {
    for (const link of links.internal) {
      const item = el(doc, "li");
      const anchor = el(doc, "a", undefined, link.url);
      anchor.href = link.url;
      anchor.target = "_blank";
      anchor.rel = "noopener";
      anchor.dataset.field = "internal-link";
      item.appendChild(anchor);
      item.appendChild(el(doc, "span", "from", `from post ${postId}`));
      internalList.appendChild(item);
      internalCount += 1;
    }
  }
  if (internalCount === 0) internalList.appendChild(el(doc, "li", "empty", "none"));
  internal.appendChild(internalList);
  section.appendChild(internal);

  const external = el(doc, "div", "external-sources");
  external.appendChild(el(doc, "h3", undefined, "external sources"));
  const externalList = el(doc, "ul");
  if (detail.origin.external_candidates.length === 0) {
    externalList.appendChild(el(doc, "li", "empty", "none"));
  }
  for (const candidate of detail.origin.external_candidates) {
    const item = el(doc, "li", "external-source");
    const anchor = el(doc, "a");
    anchor.href = candidate.url;
    anchor.target = "_blank";
    anchor.rel = "noopener";
    anchor.dataset.field = "external-domain";
    anchor.textContent = candidate.domain;
    item.appendChild(anchor);
    const badgeText =
      candidate.license_hint === null
        ? candidate.source_class
        : `${candidate.source_class} · ${candidate.license_hint}`;
    const badge = el(doc, "span", "badge source-class", badgeText);
    badge.dataset.field = "source-badge";
    item.appendChild(badge);
    item.appendChild(
      el(doc, "span", "citations", `cited by ${candidate.cited_by_posts} post(s)`),
    );
    externalList.appendChild(item);
  }
  external.appendChild(externalList);
  section.appendChild(external);
  return section;
}

function renderLabelForm(doc: Document, handlers: DetailHandlers): HTMLElement {
  const form = el(doc, "form", "label-form");
  form.appendChild(el(doc, "h3", undefined, "add label"));

  const categoryInput = el(doc, "input", "category");
  categoryInput.name = "category";
  categoryInput.setAttribute("list", "category-suggestions");
  categoryInput.placeholder = "category";
  const datalist = el(doc, "datalist");
  datalist.id = "category-suggestions";
  for (const suggestion of CATEGORY_SUGGESTIONS) {
    const option = el(doc, "option");
    option.value = suggestion;
    datalist.appendChild(option);
  }

  const verdictSelect = el(doc, "select", "origin-verdict");
  verdictSelect.name = "origin_verdict";
  for (const verdict of ORIGIN_VERDICTS) {
    const option = el(doc, "option", undefined, verdict);
    option.value = verdict;
    verdictSelect.appendChild(option);
  }
  verdictSelect.value = "undecided";

  const conflictLabel = el(doc, "label", "conflict");
  const conflictInput = el(doc, "input");
  conflictInput.type = "checkbox";
  conflictInput.name = "license_conflict";
  conflictLabel.appendChild(conflictInput);
  conflictLabel.appendChild(doc.createTextNode(" license conflict"));

  const notesInput = el(doc, "textarea", "notes");
  notesInput.name = "notes";
  notesInput.placeholder = "notes";
  const analystInput = el(doc, "input", "analyst");
  analystInput.name = "analyst";
  analystInput.placeholder = "analyst";

  const submit = el(doc, "button", "submit", "save label");
  submit.type = "submit";
  const feedback = el(doc, "p", "form-feedback");
  feedback.dataset.field = "form-feedback";

  form.appendChild(categoryInput);
  form.appendChild(datalist);
  form.appendChild(verdictSelect);
  form.appendChild(conflictLabel);
  form.appendChild(notesInput);
  form.appendChild(analystInput);
  form.appendChild(submit);
  form.appendChild(feedback);

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    handlers.onSubmit({
      category: categoryInput.value,
      origin_verdict: verdictSelect.value,
      license_conflict: conflictInput.checked,
      notes: notesInput.value,
      analyst: analystInput.value,
    });
  });
  return form;
}

export function renderLabelHistory(doc: Document, labels: LabelRecord[]): HTMLElement {
  const section = el(doc, "section", "label-history");
  section.appendChild(el(doc, "h3", undefined, "labels"));
  const list = el(doc, "ul");
  if (labels.length === 0) list.appendChild(el(doc, "li", "empty", "none yet"));
  for (const label of labels) {
    const item = el(doc, "li", "label-record");
    item.dataset.field = "label-record";
    const conflict = label.license_conflict ? " · license conflict" : "";
    const analyst = label.analyst ? ` — ${label.analyst}` : "";
    item.textContent =
      `${label.category} · ${label.origin_verdict}${conflict}${analyst} (${label.created_at})`;
    if (label.notes) item.appendChild(el(doc, "div", "notes", label.notes));
    list.appendChild(item);
  }
  section.appendChild(list);
  return section;
}

export function renderSnippetView(
  doc: Document,
  detail: CloneSetDetail,
  labels: LabelRecord[],
  handlers: DetailHandlers,
): HTMLElement {
  const root = el(doc, "section", "snippet-view");
  const back = el(doc, "a", "back", "← all clone sets");
  back.href = "#/sets";
  back.addEventListener("click", (event) => {
    event.preventDefault();
    handlers.onBack();
  });
  root.appendChild(back);

  const header = el(doc, "header");
  const fp = el(doc, "code", "fingerprint");
  fp.dataset.field = "fingerprint";
  fp.textContent = detail.fingerprint;
  header.appendChild(fp);
  const nloc = el(doc, "span", "nloc");
  nloc.dataset.field = "nloc";
  nloc.textContent = String(detail.nloc);
  header.appendChild(nloc);
  header.appendChild(el(doc, "span", "nloc-unit", "normalized lines"));
  const threads = el(doc, "span", "threads");
  threads.dataset.field = "thread-count";
  threads.textContent = String(detail.thread_count);
  header.appendChild(threads);
  header.appendChild(el(doc, "span", "threads-unit", "threads"));
  if (detail.origin.same_author_chain) {
    const chain = el(doc, "span", "badge chain", "same-author clone chain");
    chain.dataset.field = "same-author-chain";
    header.appendChild(chain);
  }
  root.appendChild(header);

  root.appendChild(renderSnippet(doc, detail));
  root.appendChild(renderOccurrences(doc, detail));
  root.appendChild(renderLinks(doc, detail));
  root.appendChild(renderLabelHistory(doc, labels));
  root.appendChild(renderLabelForm(doc, handlers));
  return root;
}
