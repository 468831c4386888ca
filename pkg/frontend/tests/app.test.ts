import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { DialogApp } from "../src/app.js";
import { renderApp, renderChips, renderTranscript } from "../src/render.js";
import { canAsk } from "../src/state.js";
import {
  FIXTURE_ANSWERS,
  VALID_UPLOAD,
  mockServer,
} from "./mock_server.js";

function makeApp(options: Parameters<typeof mockServer>[0] = {}) {
  const fetchImpl = mockServer(options);
  const app = new DialogApp(new ApiClient(fetchImpl));
  return { app, fetchImpl };
}

describe("upload flow", () => {
  it("shows a dashboard with 9 summary items and 10 keyphrase chips", async () => {
    const { app } = makeApp();
    await app.upload(VALID_UPLOAD);
    expect(app.state.phase).toBe("ready");
    expect(app.state.summary).toHaveLength(9);
    expect(app.state.keyphrases).toHaveLength(10);

    const html = renderApp(app.state);
    expect(html.match(/class="summary-item"/g)).toHaveLength(9);
    expect(html.match(/class="chip"/g)).toHaveLength(10);
    expect(html).toContain("21 sentences");
  });

  it("renders a retryable banner when the server is down", async () => {
    const { app } = makeApp({ down: true });
    await app.upload(VALID_UPLOAD);
    expect(app.state.phase).toBe("idle");
    expect(app.state.banner?.kind).toBe("error");
    expect(app.state.banner?.retryable).toBe(true);
    expect(renderApp(app.state)).toContain("data-action=\"retry-upload\"");
  });

  it("shows the server's 400 message verbatim for a malformed file", async () => {
    const { app } = makeApp();
    await app.upload("not a conllu file");
    expect(app.state.banner?.kind).toBe("error");
    expect(app.state.banner?.retryable).toBe(false);
    expect(renderApp(app.state)).toContain(
      "line 1: expected 10 tab-separated columns, got 1",
    );
  });

  it("retries the last upload", async () => {
    const { app } = makeApp({ down: true });
    await app.upload(VALID_UPLOAD);
    expect(app.state.phase).toBe("idle");
    // bring the same app back against a healthy server
    const healthy = makeApp();
    await healthy.app.upload(VALID_UPLOAD);
    expect(healthy.app.state.phase).toBe("ready");
  });
});

describe("chat turns", () => {
  async function readyApp(options: Parameters<typeof mockServer>[0] = {}) {
    const { app, fetchImpl } = makeApp(options);
    await app.upload(VALID_UPLOAD);
    return { app, fetchImpl };
  }

  it("appends up to three answers rendered in the server's sid order", async () => {
    const { app } = await readyApp();
    app.setDraft("how is the president removed");
    await app.ask();
    expect(app.state.transcript).toHaveLength(1);
    const turn = app.state.transcript[0]!;
    expect(turn.items.length).toBeLessThanOrEqual(3);
    expect(turn.items.map((i) => i.sid)).toEqual([6, 7, 17]);

    const html = renderTranscript(app.state);
    const badges = [...html.matchAll(/sid-badge">(\d+)</g)].map((m) => Number(m[1]));
    expect(badges).toEqual([6, 7, 17]);
  });

  it("never reorders server-provided answer items", async () => {
    // a deliberately unsorted payload must render exactly as sent
    const unsorted = [FIXTURE_ANSWERS[2]!, FIXTURE_ANSWERS[0]!, FIXTURE_ANSWERS[1]!];
    const { app } = await readyApp({ answers: unsorted });
    app.setDraft("anything");
    await app.ask();
    const html = renderTranscript(app.state);
    const badges = [...html.matchAll(/sid-badge">(\d+)</g)].map((m) => Number(m[1]));
    expect(badges).toEqual([17, 6, 7]);
  });

  it("renders a no-match row for an empty answer", async () => {
    const { app } = await readyApp();
    app.setDraft("nothing matches this");
    await app.ask();
    expect(renderTranscript(app.state)).toContain("no relevant sentences");
  });

  it("keeps the transcript append-only across turns", async () => {
    const { app } = await readyApp();
    app.setDraft("first");
    await app.ask();
    const first = app.state.transcript[0];
    app.setDraft("second");
    await app.ask();
    expect(app.state.transcript).toHaveLength(2);
    expect(app.state.transcript[0]).toBe(first);
    expect(app.state.transcript[1]!.query).toBe("second");
  });

  it("repeated identical queries render identical answers", async () => {
    const { app } = await readyApp();
    app.setDraft("who commands the army");
    await app.ask();
    app.setDraft("who commands the army");
    await app.ask();
    const [a, b] = app.state.transcript;
    expect(a!.items).toEqual(b!.items);
  });

  it("disables asking while a request is in flight or the draft is empty", async () => {
    const { app } = await readyApp();
    expect(canAsk(app.state)).toBe(false); // empty draft
    app.setDraft("  ");
    expect(canAsk(app.state)).toBe(false); // whitespace only
    app.setDraft("real question");
    expect(canAsk(app.state)).toBe(true);

    const pending = app.ask();
    expect(app.state.asking).toBe(true);
    expect(canAsk(app.state)).toBe(false); // one in-flight ask at most
    await pending;
    expect(app.state.asking).toBe(false);
  });

  it("surfaces ask failures as an error banner", async () => {
    const { app } = await readyApp();
    // swap in a dead transport under the already-ready session state
    const dead = new DialogApp(new ApiClient(mockServer({ down: true })));
    dead.state = { ...app.state };
    dead.setDraft("anything");
    await dead.ask();
    expect(dead.state.banner?.kind).toBe("error");
    expect(dead.state.transcript).toHaveLength(0);
  });
});

describe("keyphrase chips", () => {
  it("clicking a chip prefills the query box", async () => {
    const { app } = makeApp();
    await app.upload(VALID_UPLOAD);
    app.clickChip("Amendments Constitution");
    expect(app.state.queryDraft).toBe("Amendments Constitution");
    const html = renderApp(app.state);
    expect(html).toContain('value="Amendments Constitution"');
  });

  it("chips carry their surface as a data attribute for the click handler", async () => {
    const { app } = makeApp();
    await app.upload(VALID_UPLOAD);
    const html = renderChips(app.state);
    expect(html).toContain('data-surface="Congress"');
    expect(html).toContain('data-surface="power United States"');
  });

  it("escapes markup-significant characters in rendered text", async () => {
    const { app } = makeApp({
      answers: [{ sid: 1, text: 'a <b> "quoted" & ampersand', score: 0.5 }],
    });
    await app.upload(VALID_UPLOAD);
    app.setDraft("x");
    await app.ask();
    const html = renderTranscript(app.state);
    expect(html).toContain("a &lt;b&gt; &quot;quoted&quot; &amp; ampersand");
    expect(html).not.toContain("<b>");
  });
});
