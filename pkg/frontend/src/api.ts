// Thin typed client over the document service. The fetch implementation is
// injectable so tests can run against a mock server fixture.

export interface DocStats {
  sentences: number;
  nodes: number;
  edges: number;
  digest_ms: number;
}

export interface SummaryItem {
  sid: number;
  text: string;
  score: number;
}

export interface KeyphraseItem {
  surface: string;
  score: number;
}

export interface AnswerItem {
  sid: number;
  text: string;
  score: number;
}

export interface UploadResult {
  id: string;
  stats: DocStats;
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    readonly status: number,
    detail: string,
  ) {
    super(detail);
    this.name = "ApiError";
  }
}

async function parseDetail(resp: Response): Promise<string> {
  try {
    const body = (await resp.json()) as { detail?: string };
    if (typeof body.detail === "string") return body.detail;
  } catch {
    // non-JSON error body: fall through to the status line
  }
  return `HTTP ${resp.status}`;
}

export class ApiClient {
  constructor(
    private readonly fetchImpl: FetchLike,
    private readonly baseUrl = "",
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const resp = await this.fetchImpl(this.baseUrl + path, init);
    if (!resp.ok) throw new ApiError(resp.status, await parseDetail(resp));
    return (await resp.json()) as T;
  }

  upload(conllu: string): Promise<UploadResult> {
    return this.request<UploadResult>("/documents", {
      method: "POST",
      headers: { "content-type": "text/plain; charset=utf-8" },
      body: conllu,
    });
  }

  async summary(docId: string, k: number): Promise<SummaryItem[]> {
    const body = await this.request<{ items: SummaryItem[] }>(
      `/documents/${docId}/summary?k=${k}`,
    );
    return body.items;
  }

  async keyphrases(docId: string, k: number): Promise<KeyphraseItem[]> {
    const body = await this.request<{ items: KeyphraseItem[] }>(
      `/documents/${docId}/keyphrases?k=${k}`,
    );
    return body.items;
  }

  async ask(docId: string, q: string): Promise<AnswerItem[]> {
    const body = await this.request<{ items: AnswerItem[] }>(
      `/documents/${docId}/ask`,
      {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify({ q }),
      },
    );
    return body.items;
  }
}
