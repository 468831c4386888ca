// Browser entry point: the only file that touches the DOM.

import { ApiClient } from "./api.js";
import { DialogApp } from "./app.js";
import { renderApp } from "./render.js";

const root = document.getElementById("app");
if (!root) throw new Error("missing #app element");

const app = new DialogApp(
  new ApiClient((url, init) => fetch(url, init)),
  {},
  (state) => {
    root.innerHTML = renderApp(state);
    const input = root.querySelector<HTMLInputElement>('form[data-action="ask"] input');
    if (input && document.activeElement !== input) {
      input.focus();
      input.setSelectionRange(input.value.length, input.value.length);
    }
  },
);

root.addEventListener("click", (event) => {
  const target = event.target as HTMLElement;
  if (target.dataset.action === "chip" && target.dataset.surface) {
    app.clickChip(target.dataset.surface);
  } else if (target.dataset.action === "retry-upload") {
    void app.retryUpload();
  }
});

root.addEventListener("submit", (event) => {
  const form = event.target as HTMLFormElement;
  event.preventDefault();
  if (form.dataset.action === "upload") {
    const file = form.querySelector<HTMLInputElement>("input[type=file]")?.files?.[0];
    if (file) void file.text().then((text) => app.upload(text));
  } else if (form.dataset.action === "ask") {
    void app.ask();
  }
});

root.addEventListener("input", (event) => {
  const target = event.target as HTMLInputElement;
  if (target.matches('form[data-action="ask"] input')) {
    app.state.queryDraft = target.value; // track without re-render to keep focus
  }
});

app.setDraft("");
