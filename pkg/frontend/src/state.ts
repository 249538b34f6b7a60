// Explorer state and its pure transitions. The three views share one regex;
// editing it clears every view's results. All functions return fresh state
// objects so the render layer can treat state as immutable.

import type {
  ApiErrorBody,
  MplResponse,
  PumpResponse,
  SplitDto,
  StringsResponse,
} from "./api.js";

export type ViewName = "membership" | "strings" | "pumping";

export const PUMP_EXPONENT_MAX = 10;

export interface StringEntry {
  value: string;
  epsilon: boolean;
}

export interface StringPage {
  offset: number;
  entries: StringEntry[];
  exhausted: boolean;
}

export interface MplView {
  p: number | null;
  witness: string | null;
  split: SplitDto | null;
  counterexample: string | null;
  pumpExponent: number;
  pumped: string | null;
  pumpedMember: boolean | null;
}

export interface InlineError {
  message: string;
  position: number | null;
  retryable: boolean;
}

export interface ExplorerState {
  regex: string;
  activeView: ViewName;
  inputString: string;
  lastVerdict: boolean | null;
  stringPage: StringPage;
  mpl: MplView;
  error: InlineError | null;
}

const emptyPage = (): StringPage => ({ offset: 0, entries: [], exhausted: false });

const emptyMpl = (): MplView => ({
  p: null,
  witness: null,
  split: null,
  counterexample: null,
  pumpExponent: 0,
  pumped: null,
  pumpedMember: null,
});

export function initialState(): ExplorerState {
  return {
    regex: "",
    activeView: "membership",
    inputString: "",
    lastVerdict: null,
    stringPage: emptyPage(),
    mpl: emptyMpl(),
    error: null,
  };
}

export function setRegex(state: ExplorerState, regex: string): ExplorerState {
  // New language: every cached result is stale.
  return {
    ...state,
    regex,
    lastVerdict: null,
    stringPage: emptyPage(),
    mpl: emptyMpl(),
    error: null,
  };
}

export function setActiveView(state: ExplorerState, view: ViewName): ExplorerState {
  return { ...state, activeView: view };
}

export function setInputString(state: ExplorerState, input: string): ExplorerState {
  return { ...state, inputString: input, lastVerdict: null };
}

export function applyMembership(state: ExplorerState, member: boolean): ExplorerState {
  return { ...state, lastVerdict: member, error: null };
}

export function appendStrings(state: ExplorerState, resp: StringsResponse): ExplorerState {
  const fetched = resp.strings.map((value, index) => ({
    value,
    epsilon: resp.epsilon_flags[index] ?? value === "",
  }));
  if (resp.next_offset < state.stringPage.offset) {
    // Offsets never move backwards within a session; drop stale data.
    return state;
  }
  return {
    ...state,
    error: null,
    stringPage: {
      offset: resp.next_offset,
      entries: [...state.stringPage.entries, ...fetched],
      exhausted: resp.exhausted,
    },
  };
}

export function applyMpl(state: ExplorerState, resp: MplResponse): ExplorerState {
  return {
    ...state,
    error: null,
    mpl: {
      ...emptyMpl(),
      p: resp.p,
      witness: resp.witness,
      split: resp.split,
      counterexample: resp.counterexample,
    },
  };
}

export function setPumpExponent(state: ExplorerState, i: number): ExplorerState {
  const clamped = Math.max(0, Math.min(PUMP_EXPONENT_MAX, Math.round(i)));
  return { ...state, mpl: { ...state.mpl, pumpExponent: clamped } };
}

export function applyPump(state: ExplorerState, resp: PumpResponse): ExplorerState {
  return {
    ...state,
    error: null,
    mpl: { ...state.mpl, pumped: resp.pumped, pumpedMember: resp.member },
  };
}

export function setError(
  state: ExplorerState,
  detail: ApiErrorBody | null,
  fallback: string,
): ExplorerState {
  if (detail === null) {
    return { ...state, error: { message: fallback, position: null, retryable: true } };
  }
  return {
    ...state,
    error: {
      message: detail.message,
      position: detail.code === "syntax_error" ? (detail.position ?? null) : null,
      retryable: detail.code !== "syntax_error",
    },
  };
}

/**
 * Stale-response guard: one counter per view. A response is applied only if
 * no newer request for the same view was issued in the meantime.
 */
export class RequestGate {
  private counters = new Map<ViewName, number>();

  issue(view: ViewName): number {
    const next = (this.counters.get(view) ?? 0) + 1;
    this.counters.set(view, next);
    return next;
  }

  isCurrent(view: ViewName, ticket: number): boolean {
    return this.counters.get(view) === ticket;
  }
}
