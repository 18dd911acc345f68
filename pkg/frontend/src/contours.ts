import type { ContourSet, Polyline } from "./types.js";

export interface SnapResult {
  levelIndex: number;
  level: number;
  polyIndex: number;
  vertexIndex: number;
  r: number;
  k: number;
  distance: number;
}

/** Nearest contour vertex to a dragged point, across all levels.
 * Pure geometry over server-provided vertices; no physics involved.
 */
export function nearestContourVertex(
  r: number,
  k: number,
  contours: ContourSet,
): SnapResult | null {
  let best: SnapResult | null = null;
  contours.polylines.forEach((group, levelIndex) => {
    group.forEach((poly, polyIndex) => {
      poly.forEach(([vr, vk], vertexIndex) => {
        const distance = Math.hypot(vr - r, vk - k);
        if (best === null || distance < best.distance) {
          best = {
            levelIndex,
            level: contours.levels[levelIndex]!,
            polyIndex,
            vertexIndex,
            r: vr,
            k: vk,
            distance,
          };
        }
      });
    });
  });
  return best;
}

/** Walk n vertices along a polyline from a start index (wraps on loops). */
export function walkAlong(poly: Polyline, start: number, steps: number): [number, number] {
  const closed =
    poly.length > 2 &&
    poly[0]![0] === poly[poly.length - 1]![0] &&
    poly[0]![1] === poly[poly.length - 1]![1];
  const effective = closed ? poly.length - 1 : poly.length;
  let index = start + steps;
  if (closed) {
    index = ((index % effective) + effective) % effective;
  } else {
    index = Math.max(0, Math.min(poly.length - 1, index));
  }
  return [poly[index]![0], poly[index]![1]];
}

export interface PlotRange {
  rmin: number;
  rmax: number;
  kmin: number;
  kmax: number;
}

export const DEFAULT_RANGE: PlotRange = { rmin: 0.2, rmax: 4.0, kmin: 0.2, kmax: 4.0 };

/** Expand a plot range so every given point sits inside with a margin.
 * Keeps the range unchanged when all points already fit.
 */
export function expandToInclude(
  range: PlotRange,
  points: Array<{ r: number; k: number }>,
  margin = 0.15,
): PlotRange {
  let { rmin, rmax, kmin, kmax } = range;
  let changed = false;
  for (const { r, k } of points) {
    if (r < rmin) {
      rmin = Math.max(1e-3, r * (1 - margin));
      changed = true;
    }
    if (r > rmax) {
      rmax = r * (1 + margin);
      changed = true;
    }
    if (k < kmin) {
      kmin = Math.max(1e-3, k * (1 - margin));
      changed = true;
    }
    if (k > kmax) {
      kmax = k * (1 + margin);
      changed = true;
    }
  }
  return changed ? { rmin, rmax, kmin, kmax } : range;
}

export function rangesEqual(a: PlotRange, b: PlotRange): boolean {
  return a.rmin === b.rmin && a.rmax === b.rmax && a.kmin === b.kmin && a.kmax === b.kmax;
}
