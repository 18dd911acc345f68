// Wire types mirroring the service's JSON schemas.

export interface DesignDict {
  W: number;
  L: number;
  H: number;
  alpha_deg: number;
  r: number;
  k: number;
  F: number;
  V: number;
}

export interface FixedVolumeOptimum {
  volume: number;
  alpha_deg: number;
  r_min: number;
  k_min: number;
  W_min: number;
  L_min: number;
  H_min: number;
  S_min: number;
}

export interface FixedFloorOptimum {
  floor_area: number;
  height: number;
  alpha_deg: number;
  W_min: number;
  L_min: number;
  S_min: number;
  cubic_residual: number;
  single_real_root: boolean;
}

export interface CompactnessReport {
  design: DesignDict;
  S: number;
  V: number;
  S_min: number;
  ratio: number;
  headroom: number;
  optimum: FixedVolumeOptimum;
}

export interface FloorCompactness {
  design: DesignDict;
  S: number;
  ratio: number;
  headroom: number;
  optimum: FixedFloorOptimum;
}

export interface AssessReport {
  compactness: CompactnessReport;
  fixed_floor: FloorCompactness;
}

export interface FieldAxis {
  name: string;
  unit: string;
  values: number[];
}

export interface FieldMarker {
  x: number;
  y: number;
  value: number;
}

export interface ScalarField2D {
  x: FieldAxis;
  y: FieldAxis;
  values: number[][];
  marker: FieldMarker | null;
}

export type Polyline = [number, number][];

export interface ContourSet {
  levels: number[];
  polylines: Polyline[][];
}

export interface ApiErrorBody {
  code: "BAD_INPUT" | "OUT_OF_DOMAIN";
  message: string;
  field: string | null;
}

export interface DesignBody {
  W: number;
  L: number;
  H: number;
  alpha_deg: number;
}

export interface RatioBody {
  r: number;
  k: number;
  V: number;
  alpha_deg: number;
}
