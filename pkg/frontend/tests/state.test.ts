import { describe, expect, it, vi } from "vitest";

import {
  adoptRank,
  bumpRevision,
  debounce,
  emptyState,
  rankIsFresh,
} from "../src/state.js";
import type { RankResponse } from "../src/api.js";

const RESPONSE: RankResponse = {
  order: ["A", "B"],
  xi: { A: 0.9, B: 0.1 },
  ties: [["A"], ["B"]],
  stage1: null,
};

describe("revision protocol", () => {
  it("adopts a response requested at the current revision", () => {
    const state = emptyState();
    const rev = bumpRevision(state);
    expect(adoptRank(state, RESPONSE, rev)).toBe(true);
    expect(rankIsFresh(state)).toBe(true);
    expect(state.lastRank?.response.order).toEqual(["A", "B"]);
  });

  it("discards a response for superseded inputs", () => {
    const state = emptyState();
    const oldRev = bumpRevision(state);
    bumpRevision(state); // the user edited again before the response landed
    expect(adoptRank(state, RESPONSE, oldRev)).toBe(false);
    expect(state.lastRank).toBeNull();
    expect(rankIsFresh(state)).toBe(false);
  });

  it("a displayed result goes stale on the next edit", () => {
    const state = emptyState();
    const rev = bumpRevision(state);
    adoptRank(state, RESPONSE, rev);
    bumpRevision(state);
    expect(rankIsFresh(state)).toBe(false);
  });
});

describe("debounce", () => {
  it("fires once after the quiet period with the last arguments", () => {
    vi.useFakeTimers();
    const calls: number[] = [];
    const fn = debounce((v: number) => calls.push(v), 150);
    fn(1);
    vi.advanceTimersByTime(100);
    fn(2);
    vi.advanceTimersByTime(100);
    fn(3);
    expect(calls).toEqual([]);
    vi.advanceTimersByTime(150);
    expect(calls).toEqual([3]);
    vi.useRealTimers();
  });
});
