// DOM-free controller: owns the session state, talks to the API, notifies a
// listener after every transition. main.ts binds it to the real document.

import { ApiClient, ApiError } from "./api.js";
import {
  askFailed,
  askStarted,
  askSucceeded,
  canAsk,
  chipClicked,
  draftChanged,
  initialSession,
  uploadFailed,
  uploadStarted,
  uploadSucceeded,
  type UiSession,
} from "./state.js";

export interface AppOptions {
  summaryCount?: number;
  keyphraseCount?: number;
}

function describe(error: unknown): { message: string; retryable: boolean } {
  if (error instanceof ApiError) {
    // 4xx carries the server's own message verbatim; only server trouble retries
    return { message: error.message, retryable: error.status >= 500 };
  }
  return { message: "server unreachable, check that it is running", retryable: true };
}

export class DialogApp {
  state: UiSession = initialSession();
  private lastUpload: string | null = null;

  constructor(
    private readonly api: ApiClient,
    private readonly options: AppOptions = {},
    private readonly onChange: (s: UiSession) => void = () => {},
  ) {}

  private set(next: UiSession): void {
    this.state = next;
    this.onChange(next);
  }

  async upload(conllu: string): Promise<void> {
    this.lastUpload = conllu;
    this.set(uploadStarted(this.state));
    try {
      const { id, stats } = await this.api.upload(conllu);
      const [summary, keyphrases] = await Promise.all([
        this.api.summary(id, this.options.summaryCount ?? 9),
        this.api.keyphrases(id, this.options.keyphraseCount ?? 10),
      ]);
      this.set(uploadSucceeded(this.state, id, stats, summary, keyphrases));
    } catch (error) {
      const { message, retryable } = describe(error);
      this.set(uploadFailed(this.state, message, retryable));
    }
  }

  async retryUpload(): Promise<void> {
    if (this.lastUpload !== null) await this.upload(this.lastUpload);
  }

  setDraft(text: string): void {
    this.set(draftChanged(this.state, text));
  }

  clickChip(surface: string): void {
    this.set(chipClicked(this.state, surface));
  }

  async ask(): Promise<void> {
    if (!canAsk(this.state) || this.state.docId === null) return;
    const query = this.state.queryDraft.trim();
    this.set(askStarted(this.state));
    try {
      const items = await this.api.ask(this.state.docId, query);
      this.set(askSucceeded(this.state, query, items));
    } catch (error) {
      const { message, retryable } = describe(error);
      this.set(askFailed(this.state, message, retryable));
    }
  }
}
