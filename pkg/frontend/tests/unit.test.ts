import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { Debouncer } from "../src/debounce.js";
import { RequestGate } from "../src/sequencer.js";
import { formatArea, formatRatio, parseAngleDeg, parsePositive } from "../src/format.js";
import {
  DEFAULT_RANGE,
  expandToInclude,
  nearestContourVertex,
  rangesEqual,
  walkAlong,
} from "../src/contours.js";
import { ExplorerState, contourKey } from "../src/state.js";
import type { AssessReport, ContourSet, FixedFloorOptimum, ScalarField2D } from "../src/types.js";

describe("Debouncer", () => {
  beforeEach(() => vi.useFakeTimers());
  afterEach(() => vi.useRealTimers());

  it("collapses a burst of edits into one trailing call after 150 ms", () => {
    const debouncer = new Debouncer(150);
    const calls: number[] = [];
    for (let i = 0; i < 10; i++) {
      debouncer.schedule(() => calls.push(i));
      vi.advanceTimersByTime(100); // each edit arrives before the deadline
    }
    expect(calls).toEqual([]);
    vi.advanceTimersByTime(150);
    expect(calls).toEqual([9]);
  });

  it("fires separately for edits spaced beyond the delay", () => {
    const debouncer = new Debouncer(150);
    let count = 0;
    debouncer.schedule(() => count++);
    vi.advanceTimersByTime(151);
    debouncer.schedule(() => count++);
    vi.advanceTimersByTime(151);
    expect(count).toBe(2);
  });

  it("can cancel a pending call", () => {
    const debouncer = new Debouncer(150);
    let count = 0;
    debouncer.schedule(() => count++);
    expect(debouncer.pending).toBe(true);
    debouncer.cancel();
    vi.advanceTimersByTime(500);
    expect(count).toBe(0);
  });
});

describe("RequestGate", () => {
  it("discards stale responses by sequence number", () => {
    const gate = new RequestGate();
    const first = gate.next();
    const second = gate.next();
    // Second response lands first and wins; the slow first must be dropped.
    expect(gate.accept(second)).toBe(true);
    expect(gate.accept(first)).toBe(false);
  });

  it("rejects responses superseded while in flight", () => {
    const gate = new RequestGate();
    const a = gate.next();
    gate.next(); // newer request issued before a's response arrived
    expect(gate.accept(a)).toBe(false);
  });

  it("accepts monotonically", () => {
    const gate = new RequestGate();
    const a = gate.next();
    expect(gate.accept(a)).toBe(true);
    const b = gate.next();
    expect(gate.accept(b)).toBe(true);
  });
});

describe("formatting", () => {
  it("ratios carry four decimals", () => {
    expect(formatRatio(1.190059906)).toBe("1.1901");
    expect(formatRatio(1.0000000001)).toBe("1.0000");
    expect(formatRatio(1.0028315)).toBe("1.0028");
  });

  it("areas carry two decimals", () => {
    expect(formatArea(877.7655)).toBe("877.77");
  });

  it("parses positive numbers and angles", () => {
    expect(parsePositive("12.5")).toBe(12.5);
    expect(parsePositive("-1")).toBeNull();
    expect(parsePositive("abc")).toBeNull();
    expect(parseAngleDeg("35")).toBe(35);
    expect(parseAngleDeg("90")).toBeNull();
    expect(parseAngleDeg("0")).toBeNull();
  });
});

describe("contour helpers", () => {
  const contours: ContourSet = {
    levels: [1.1],
    polylines: [[[[1, 1], [2, 1], [2, 2], [1, 2], [1, 1]]]],
  };

  it("snaps to the nearest vertex", () => {
    const hit = nearestContourVertex(1.95, 1.05, contours);
    expect(hit).not.toBeNull();
    expect([hit!.r, hit!.k]).toEqual([2, 1]);
    expect(hit!.level).toBe(1.1);
  });

  it("walks along a closed polyline with wrap-around", () => {
    const poly = contours.polylines[0]![0]!;
    expect(walkAlong(poly, 0, 1)).toEqual([2, 1]);
    expect(walkAlong(poly, 3, 2)).toEqual([2, 1]); // wraps past the seam
    expect(walkAlong(poly, 0, -1)).toEqual([1, 2]);
  });

  it("expands ranges only when a point falls outside", () => {
    const inside = expandToInclude(DEFAULT_RANGE, [{ r: 1.5, k: 1.0 }]);
    expect(rangesEqual(inside, DEFAULT_RANGE)).toBe(true);
    const out = expandToInclude(DEFAULT_RANGE, [{ r: 6.0, k: 0.5 }]);
    expect(out.rmax).toBeGreaterThan(6.0);
    expect(out.kmin).toBe(DEFAULT_RANGE.kmin);
  });
});

function fakeReport(overrides?: Partial<{ r: number; k: number }>): AssessReport {
  const r = overrides?.r ?? 0.79;
  const k = overrides?.k ?? 0.25;
  const design = { W: 19.9, L: 15.75, H: 5, alpha_deg: 35, r, k, F: 313.4, V: 1567.1 };
  return {
    compactness: {
      design,
      S: 877.77,
      V: 1567.1,
      S_min: 737.58,
      ratio: 1.19,
      headroom: 140.18,
      optimum: {
        volume: 1567.1,
        alpha_deg: 35,
        r_min: 1.4,
        k_min: 0.86,
        W_min: 10.9,
        L_min: 15.35,
        H_min: 9.37,
        S_min: 737.58,
      },
    },
    fixed_floor: {
      design,
      S: 877.77,
      ratio: 1.08,
      headroom: 64.92,
      optimum: {
        floor_area: 313.4,
        height: 5,
        alpha_deg: 35,
        W_min: 12.85,
        L_min: 24.4,
        S_min: 812.84,
        cubic_residual: 1e-16,
        single_real_root: true,
      },
    },
  };
}

describe("ExplorerState", () => {
  it("apply-optimum in fixed-floor mode preserves H and alpha", () => {
    const state = new ExplorerState();
    state.mode = "fixed-floor";
    state.floorTarget = { F: 313.4, H: 5, alphaDeg: 35 };
    const opt: FixedFloorOptimum = fakeReport().fixed_floor.optimum;
    state.lastFloorOpt = opt;
    expect(state.applyOptimum()).toBe(true);
    expect(state.mode).toBe("assess");
    expect(state.design.W).toBe(opt.W_min);
    expect(state.design.L).toBe(opt.L_min);
    expect(state.design.H).toBe(5);
    expect(state.design.alphaDeg).toBe(35);
  });

  it("apply-optimum in assess mode copies the fixed-volume optimum", () => {
    const state = new ExplorerState();
    state.acceptAssess(fakeReport());
    expect(state.applyOptimum()).toBe(true);
    expect(state.design.W).toBe(10.9);
    expect(state.design.H).toBe(9.37);
  });

  it("apply-optimum without a response is a no-op", () => {
    const state = new ExplorerState();
    expect(state.applyOptimum()).toBe(false);
  });

  it("auto-expands the plotted window to keep the design point visible", () => {
    const state = new ExplorerState();
    state.acceptAssess(fakeReport({ r: 7.5, k: 0.4 }));
    expect(state.range.rmax).toBeGreaterThan(7.5);
  });

  it("contour cache entries are immutable and keyed by plot parameters", () => {
    const state = new ExplorerState();
    const field: ScalarField2D = {
      x: { name: "r", unit: "", values: [1, 2] },
      y: { name: "k", unit: "", values: [1, 2] },
      values: [[1, 1.2], [1.1, 1.4]],
      marker: null,
    };
    const contours: ContourSet = { levels: [1.1], polylines: [[]] };
    const key = state.cacheKey();
    const stored = state.storeBundle(key, { field, contours });
    expect(state.cachedBundle()).toBe(stored);
    expect(Object.isFrozen(stored)).toBe(true);
    expect(Object.isFrozen(stored.field)).toBe(true);
    // A different resolution produces a different key, hence a miss.
    state.resolution = 64;
    expect(state.cachedBundle()).toBeUndefined();
    expect(state.cacheSize).toBe(1);
  });

  it("cache key covers alpha, ranges, resolution and levels", () => {
    const a = contourKey(35, DEFAULT_RANGE, 192, [1.05, 1.1]);
    const b = contourKey(36, DEFAULT_RANGE, 192, [1.05, 1.1]);
    const c = contourKey(35, DEFAULT_RANGE, 192, [1.05]);
    expect(a).not.toBe(b);
    expect(a).not.toBe(c);
  });
});
