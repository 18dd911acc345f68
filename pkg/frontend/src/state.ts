import type { AssessReport, ContourSet, FixedFloorOptimum, FixedVolumeOptimum, ScalarField2D } from "./types.js";
import { DEFAULT_RANGE, type PlotRange, expandToInclude, rangesEqual } from "./contours.js";

export type Mode = "assess" | "fixed-volume" | "fixed-floor";

export interface DesignInputs {
  W: number;
  L: number;
  H: number;
  alphaDeg: number;
}

export interface VolumeInputs {
  V: number;
  alphaDeg: number;
}

export interface FloorInputs {
  F: number;
  H: number;
  alphaDeg: number;
}

export interface ContourBundle {
  field: ScalarField2D;
  contours: ContourSet;
}

export const DEFAULT_LEVELS = [1.01, 1.05, 1.1, 1.25, 1.5];

/** Cache key for one plotted contour map. */
export function contourKey(alphaDeg: number, range: PlotRange, res: number, levels: number[]): string {
  return [alphaDeg, range.rmin, range.rmax, range.kmin, range.kmax, res, levels.join("/")].join("|");
}

/** All explorer state outside the DOM.  Numbers shown to the user live in
 * the last server responses; inputs echo what the user typed. */
export class ExplorerState {
  mode: Mode = "assess";
  design: DesignInputs = { W: 19.9, L: 15.75, H: 5, alphaDeg: 35 };
  volumeTarget: VolumeInputs = { V: 300, alphaDeg: 30 };
  floorTarget: FloorInputs = { F: 100, H: 3, alphaDeg: 30 };
  levels: number[] = [...DEFAULT_LEVELS];
  resolution = 192;
  range: PlotRange = { ...DEFAULT_RANGE };

  lastAssess: AssessReport | null = null;
  lastVolumeOpt: FixedVolumeOptimum | null = null;
  lastFloorOpt: FixedFloorOptimum | null = null;

  private cache = new Map<string, Readonly<ContourBundle>>();

  get alphaDeg(): number {
    if (this.mode === "fixed-volume") return this.volumeTarget.alphaDeg;
    if (this.mode === "fixed-floor") return this.floorTarget.alphaDeg;
    return this.design.alphaDeg;
  }

  /** Accept an assessment and auto-expand the plotted window so both the
   * design point and the optimum marker stay visible. */
  acceptAssess(report: AssessReport): void {
    this.lastAssess = report;
    const points = [
      { r: report.compactness.design.r, k: report.compactness.design.k },
      { r: report.compactness.optimum.r_min, k: report.compactness.optimum.k_min },
    ];
    const expanded = expandToInclude(this.range, points);
    if (!rangesEqual(expanded, this.range)) this.range = expanded;
  }

  /** Copy the last server optimum into the editable design inputs and switch
   * to the assess loop.  Fixed-floor keeps the user's H and alpha. */
  applyOptimum(): boolean {
    if (this.mode === "fixed-floor") {
      if (!this.lastFloorOpt) return false;
      this.design = {
        W: this.lastFloorOpt.W_min,
        L: this.lastFloorOpt.L_min,
        H: this.lastFloorOpt.height,
        alphaDeg: this.floorTarget.alphaDeg,
      };
    } else if (this.mode === "fixed-volume") {
      if (!this.lastVolumeOpt) return false;
      this.design = {
        W: this.lastVolumeOpt.W_min,
        L: this.lastVolumeOpt.L_min,
        H: this.lastVolumeOpt.H_min,
        alphaDeg: this.volumeTarget.alphaDeg,
      };
    } else {
      if (!this.lastAssess) return false;
      const opt = this.lastAssess.compactness.optimum;
      this.design = {
        W: opt.W_min,
        L: opt.L_min,
        H: opt.H_min,
        alphaDeg: this.design.alphaDeg,
      };
    }
    this.mode = "assess";
    return true;
  }

  cacheKey(): string {
    return contourKey(this.alphaDeg, this.range, this.resolution, this.levels);
  }

  cachedBundle(): Readonly<ContourBundle> | undefined {
    return this.cache.get(this.cacheKey());
  }

  /** Contour bundles are immutable once fetched. */
  storeBundle(key: string, bundle: ContourBundle): Readonly<ContourBundle> {
    const frozen = Object.freeze({
      field: Object.freeze(bundle.field),
      contours: Object.freeze(bundle.contours),
    });
    this.cache.set(key, frozen);
    return frozen;
  }

  get cacheSize(): number {
    return this.cache.size;
  }
}
