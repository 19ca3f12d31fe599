// App shell: hash routing, data loading, and label submission.

import { ApiClient, ApiError } from "./api.js";
import {
  renderErrorBanner,
  renderLabelHistory,
  renderListView,
  renderSnippetView,
} from "./render.js";
import type { LabelDraft, ListFilters } from "./types.js";
import { validateDraft } from "./validate.js";

const DEFAULT_FILTERS: ListFilters = {
  min_nloc: 20,
  min_threads: 2,
  page: 1,
  per_page: 50,
};

export function parseRoute(hash: string): { view: "list"; filters: ListFilters } | { view: "detail"; key: string } {
  const cleaned = hash.replace(/^#\/?/, "");
  const detail = cleaned.match(/^set\/([0-9a-f-]+)/);
  if (detail) return { view: "detail", key: detail[1] };
  const [, query = ""] = cleaned.split("?");
  const params = new URLSearchParams(query);
  const filters = { ...DEFAULT_FILTERS };
  for (const field of ["min_nloc", "min_threads", "page", "per_page"] as const) {
    const value = params.get(field);
    if (value !== null && /^\d+$/.test(value)) filters[field] = Number(value);
  }
  return { view: "list", filters };
}

export function routeFor(filters: ListFilters): string {
  const params = new URLSearchParams({
    min_nloc: String(filters.min_nloc),
    min_threads: String(filters.min_threads),
    page: String(filters.page),
    per_page: String(filters.per_page),
  });
  return `#/sets?${params}`;
}

export class App {
  constructor(
    private readonly api: ApiClient,
    private readonly root: HTMLElement,
    private readonly doc: Document,
    private readonly navigate: (hash: string) => void,
  ) {}

  private show(...nodes: HTMLElement[]): void {
    this.root.replaceChildren(...nodes);
  }

  async render(hash: string): Promise<void> {
    const route = parseRoute(hash);
    try {
      if (route.view === "detail") {
        await this.renderDetail(route.key);
      } else {
        await this.renderList(route.filters);
      }
    } catch (error) {
      this.show(renderErrorBanner(this.doc, describe(error)));
    }
  }

  private async renderList(filters: ListFilters): Promise<void> {
    const [page, labels] = await Promise.all([
      this.api.listCloneSets(filters),
      this.api.getAllLabels(),
    ]);
    const counts = new Map<string, number>();
    for (const label of labels) {
      counts.set(label.fingerprint, (counts.get(label.fingerprint) ?? 0) + 1);
    }
    this.show(
      renderListView(this.doc, page, counts, filters, {
        onOpen: (key) => this.navigate(`#/set/${key}`),
        onPage: (newPage) => this.navigate(routeFor({ ...filters, page: newPage })),
      }),
    );
  }

  /** Resolves once the most recent form submission settles (for tests). */
  pendingSubmission: Promise<boolean> = Promise.resolve(false);

  private async renderDetail(key: string): Promise<void> {
    const [detail, labels] = await Promise.all([
      this.api.getCloneSet(key),
      this.api.getLabels(key),
    ]);
    const view = renderSnippetView(this.doc, detail, labels, {
      onBack: () => this.navigate("#/sets"),
      onSubmit: (draft) => {
        this.pendingSubmission = this.submitLabel(key, draft);
      },
    });
    this.show(view);
  }

  async submitLabel(key: string, draft: LabelDraft): Promise<boolean> {
    const feedback = this.root.querySelector<HTMLElement>('[data-field="form-feedback"]');
    const problems = validateDraft(draft);
    if (problems.length > 0) {
      if (feedback) {
        feedback.textContent = problems.join("; ");
        feedback.className = "form-feedback error";
      }
      return false;
    }
    try {
      await this.api.postLabel(key, draft);
    } catch (error) {
      if (feedback) {
        feedback.textContent = describe(error);
        feedback.className = "form-feedback error";
      }
      return false;
    }
    // refresh the history in place; the draft form stays as-is
    const labels = await this.api.getLabels(key);
    const history = this.root.querySelector("section.label-history");
    if (history) {
      history.replaceWith(renderLabelHistory(this.doc, labels));
    }
    if (feedback) {
      feedback.textContent = "label saved";
      feedback.className = "form-feedback ok";
    }
    return true;
  }
}

function describe(error: unknown): string {
  if (error instanceof ApiError) return `service error (${error.status}): ${error.message}`;
  if (error instanceof Error) return `service unreachable: ${error.message}`;
  return String(error);
}

export function start(win: Window & typeof globalThis): App {
  const doc = win.document;
  const root = doc.getElementById("app");
  if (!root) throw new Error("missing #app container");
  const app = new App(new ApiClient(""), root, doc, (hash) => {
    win.location.hash = hash;
  });
  win.addEventListener("hashchange", () => void app.render(win.location.hash));
  void app.render(win.location.hash);
  return app;
}
