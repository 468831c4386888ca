// Session state and its pure transitions. The transcript is append-only and
// answer items are stored exactly as the server sent them; rendering and
// transitions never reorder them.

import type { AnswerItem, DocStats, KeyphraseItem, SummaryItem } from "./api.js";

export interface ChatTurn {
  query: string;
  items: AnswerItem[];
}

export interface Banner {
  kind: "error" | "busy";
  message: string;
  retryable: boolean;
}

export interface UiSession {
  phase: "idle" | "uploading" | "ready";
  docId: string | null;
  stats: DocStats | null;
  summary: SummaryItem[];
  keyphrases: KeyphraseItem[];
  transcript: ChatTurn[];
  queryDraft: string;
  asking: boolean;
  banner: Banner | null;
}

export function initialSession(): UiSession {
  return {
    phase: "idle",
    docId: null,
    stats: null,
    summary: [],
    keyphrases: [],
    transcript: [],
    queryDraft: "",
    asking: false,
    banner: null,
  };
}

export function uploadStarted(s: UiSession): UiSession {
  return {
    ...initialSession(),
    phase: "uploading",
    banner: { kind: "busy", message: "Digesting document…", retryable: false },
  };
}

export function uploadSucceeded(
  s: UiSession,
  docId: string,
  stats: DocStats,
  summary: SummaryItem[],
  keyphrases: KeyphraseItem[],
): UiSession {
  return {
    ...s,
    phase: "ready",
    docId,
    stats,
    summary,
    keyphrases,
    transcript: [],
    banner: null,
  };
}

export function uploadFailed(s: UiSession, message: string, retryable: boolean): UiSession {
  return {
    ...s,
    phase: "idle",
    banner: { kind: "error", message, retryable },
  };
}

export function draftChanged(s: UiSession, text: string): UiSession {
  return { ...s, queryDraft: text };
}

export function chipClicked(s: UiSession, surface: string): UiSession {
  return { ...s, queryDraft: surface };
}

export function askStarted(s: UiSession): UiSession {
  return { ...s, asking: true, banner: null };
}

export function askSucceeded(s: UiSession, query: string, items: AnswerItem[]): UiSession {
  return {
    ...s,
    asking: false,
    queryDraft: "",
    transcript: [...s.transcript, { query, items }],
  };
}

export function askFailed(s: UiSession, message: string, retryable: boolean): UiSession {
  return { ...s, asking: false, banner: { kind: "error", message, retryable } };
}

export function canAsk(s: UiSession): boolean {
  return s.phase === "ready" && !s.asking && s.queryDraft.trim().length > 0;
}
