import type {
  CloneSetDetail,
  CloneSetListPage,
  LabelDraft,
  LabelRecord,
  ListFilters,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
  }
}

type FetchFn = (input: string, init?: RequestInit) => Promise<Response>;

async function readError(response: Response): Promise<string> {
  try {
    const body = await response.json();
    if (typeof body?.detail === "string") return body.detail;
    if (body?.detail !== undefined) return JSON.stringify(body.detail);
    return JSON.stringify(body);
  } catch {
    return `HTTP ${response.status}`;
  }
}

export class ApiClient {
  constructor(
    private readonly baseUrl = "",
    private readonly fetchFn: FetchFn = (input, init) => fetch(input, init),
  ) {}

  private async getJson<T>(path: string): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path);
    if (!response.ok) throw new ApiError(response.status, await readError(response));
    return (await response.json()) as T;
  }

  listCloneSets(filters: ListFilters): Promise<CloneSetListPage> {
    const params = new URLSearchParams({
      min_nloc: String(filters.min_nloc),
      min_threads: String(filters.min_threads),
      page: String(filters.page),
      per_page: String(filters.per_page),
    });
    return this.getJson(`/api/clone-sets?${params}`);
  }

  getCloneSet(key: string): Promise<CloneSetDetail> {
    return this.getJson(`/api/clone-sets/${encodeURIComponent(key)}`);
  }

  getLabels(key: string): Promise<LabelRecord[]> {
    return this.getJson<{ labels: LabelRecord[] }>(
      `/api/clone-sets/${encodeURIComponent(key)}/labels`,
    ).then((body) => body.labels);
  }

  getAllLabels(): Promise<LabelRecord[]> {
    return this.getJson<{ labels: LabelRecord[] }>("/api/labels").then(
      (body) => body.labels,
    );
  }

  getStats(): Promise<Record<string, unknown>> {
    return this.getJson("/api/stats");
  }

  async postLabel(key: string, draft: LabelDraft): Promise<LabelRecord> {
    const response = await this.fetchFn(
      `${this.baseUrl}/api/clone-sets/${encodeURIComponent(key)}/labels`,
      {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(draft),
      },
    );
    if (!response.ok) throw new ApiError(response.status, await readError(response));
    return (await response.json()) as LabelRecord;
  }
}
