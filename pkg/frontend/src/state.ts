/**
 * Session state and the staleness protocol.
 *
 * Every input edit bumps `revision`.  A response is adopted only when it was
 * requested at the current revision; anything older is discarded, so the
 * displayed ranking can never disagree with the current inputs.
 */

import type { Direction, Method, RankResponse, SweepResponse } from "./api.js";

export interface SessionState {
  algorithms: string[];
  benchmarks: string[];
  mu: number[][];
  sigma: number[][];
  muText: string[][]; // verbatim cells for faithful CSV export
  sigmaText: string[][];
  wMu: number;
  direction: Direction;
  method: Method;
  revision: number;
  lastRank: { response: RankResponse; revision: number } | null;
  lastSweep: { response: SweepResponse; revision: number } | null;
}

export function emptyState(): SessionState {
  return {
    algorithms: [],
    benchmarks: [],
    mu: [],
    sigma: [],
    muText: [],
    sigmaText: [],
    wMu: 0.7,
    direction: "benefit",
    method: "atopsis",
    revision: 0,
    lastRank: null,
    lastSweep: null,
  };
}

/** Any input change: invalidates displayed results until a fresh response. */
export function bumpRevision(state: SessionState): number {
  state.revision += 1;
  return state.revision;
}

export function adoptRank(state: SessionState, response: RankResponse, revision: number): boolean {
  if (revision !== state.revision) return false; // stale: inputs moved on
  state.lastRank = { response, revision };
  return true;
}

export function adoptSweep(state: SessionState, response: SweepResponse, revision: number): boolean {
  if (revision !== state.revision) return false;
  state.lastSweep = { response, revision };
  return true;
}

/** Is the displayed result current for the inputs on screen? */
export function rankIsFresh(state: SessionState): boolean {
  return state.lastRank !== null && state.lastRank.revision === state.revision;
}

export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  waitMs: number,
): (...args: A) => void {
  let timer: ReturnType<typeof setTimeout> | null = null;
  return (...args: A) => {
    if (timer !== null) clearTimeout(timer);
    timer = setTimeout(() => {
      timer = null;
      fn(...args);
    }, waitMs);
  };
}
