// DOM wiring: a shared regex field, three tool tabs, and one content pane
// re-rendered from state after every applied response. Responses are applied
// in request order; anything superseded by a newer request is discarded.

import { ApiClient, ApiRequestError } from "./api.js";
import {
  ExplorerState,
  RequestGate,
  ViewName,
  applyMembership,
  applyMpl,
  applyPump,
  appendStrings,
  initialState,
  setActiveView,
  setError,
  setInputString,
  setPumpExponent,
  setRegex,
} from "./state.js";
import { renderActiveView } from "./views.js";

const STRINGS_BATCH = 10;

// Same-origin by default; ?api=http://127.0.0.1:8000 points elsewhere.
const apiBase = new URLSearchParams(location.search).get("api") ?? "";
const client = new ApiClient(apiBase);
const gate = new RequestGate();
let state: ExplorerState = initialState();

const regexInput = document.getElementById("regex") as HTMLInputElement;
const memberInput = document.getElementById("member-input") as HTMLInputElement;
const pane = document.getElementById("pane") as HTMLElement;
const tabs = Array.from(document.querySelectorAll<HTMLButtonElement>("[data-view]"));

function update(next: ExplorerState): void {
  state = next;
  pane.innerHTML = renderActiveView(state);
  for (const tab of tabs) {
    tab.classList.toggle("active", tab.dataset.view === state.activeView);
  }
}

function fail(exc: unknown): void {
  if (exc instanceof ApiRequestError) {
    update(setError(state, exc.detail, exc.message));
  } else {
    update(setError(state, null, "service unreachable; check the server and retry"));
  }
}

async function runMembership(): Promise<void> {
  const ticket = gate.issue("membership");
  try {
    const resp = await client.membership(state.regex, state.inputString);
    if (gate.isCurrent("membership", ticket)) {
      update(applyMembership(state, resp.member));
    }
  } catch (exc) {
    if (gate.isCurrent("membership", ticket)) fail(exc);
  }
}

async function fetchStrings(): Promise<void> {
  const ticket = gate.issue("strings");
  try {
    const resp = await client.strings(state.regex, STRINGS_BATCH, state.stringPage.offset);
    if (gate.isCurrent("strings", ticket)) {
      update(appendStrings(state, resp));
    }
  } catch (exc) {
    if (gate.isCurrent("strings", ticket)) fail(exc);
  }
}

async function fetchMpl(): Promise<void> {
  const ticket = gate.issue("pumping");
  try {
    const resp = await client.mpl(state.regex, "exact");
    if (!gate.isCurrent("pumping", ticket)) return;
    update(applyMpl(state, resp));
    if (resp.split !== null) {
      await pumpAt(state.mpl.pumpExponent);
    }
  } catch (exc) {
    if (gate.isCurrent("pumping", ticket)) fail(exc);
  }
}

async function pumpAt(i: number): Promise<void> {
  const split = state.mpl.split;
  if (split === null) return;
  update(setPumpExponent(state, i));
  const ticket = gate.issue("pumping");
  try {
    const resp = await client.pump(state.regex, split.x, split.y, split.z,
                                   state.mpl.pumpExponent);
    if (gate.isCurrent("pumping", ticket)) {
      update(applyPump(state, resp));
    }
  } catch (exc) {
    if (gate.isCurrent("pumping", ticket)) fail(exc);
  }
}

regexInput.addEventListener("input", () => {
  update(setRegex(state, regexInput.value));
});

memberInput.addEventListener("input", () => {
  update(setInputString(state, memberInput.value));
});

for (const tab of tabs) {
  tab.addEventListener("click", () => {
    update(setActiveView(state, tab.dataset.view as ViewName));
  });
}

document.getElementById("member-test")!.addEventListener("click", () => {
  void runMembership();
});

pane.addEventListener("click", (event) => {
  const target = event.target as HTMLElement;
  const action = target.dataset.action;
  if (action === "get-strings") void fetchStrings();
  if (action === "get-min-pump") void fetchMpl();
  if (action === "retry") {
    if (state.activeView === "membership") void runMembership();
    else if (state.activeView === "strings") void fetchStrings();
    else void fetchMpl();
  }
});

pane.addEventListener("input", (event) => {
  const target = event.target as HTMLInputElement;
  if (target.dataset.action === "pump-slider") {
    void pumpAt(Number(target.value));
  }
});

update(state);
