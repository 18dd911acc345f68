import type {
  ApiErrorBody,
  AssessReport,
  ContourSet,
  DesignBody,
  FixedFloorOptimum,
  FixedVolumeOptimum,
  RatioBody,
  ScalarField2D,
} from "./types.js";

export class ApiError extends Error {
  constructor(readonly body: ApiErrorBody, readonly status: number) {
    super(body.message);
  }
}

export class ConnectionError extends Error {}

export interface FieldRequest {
  alphaDeg: number;
  rmin: number;
  rmax: number;
  kmin: number;
  kmax: number;
  res: number;
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** Thin typed client over the /api/v1 endpoints; the UI's only data source. */
export class ApiClient {
  constructor(
    readonly base = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchFn(this.base + path, init);
    } catch (err) {
      throw new ConnectionError(`service unreachable: ${String(err)}`);
    }
    if (response.status === 400) {
      throw new ApiError((await response.json()) as ApiErrorBody, 400);
    }
    if (!response.ok) {
      throw new ConnectionError(`unexpected status ${response.status}`);
    }
    return (await response.json()) as T;
  }

  health(): Promise<{ status: string }> {
    return this.request("/api/v1/health");
  }

  optimizeVolume(volume: number, alphaDeg: number): Promise<FixedVolumeOptimum> {
    return this.request(`/api/v1/optimize/volume?V=${volume}&alpha_deg=${alphaDeg}`);
  }

  optimizeFloor(floor: number, height: number, alphaDeg: number): Promise<FixedFloorOptimum> {
    return this.request(`/api/v1/optimize/floor?F=${floor}&H=${height}&alpha_deg=${alphaDeg}`);
  }

  assess(body: DesignBody | RatioBody): Promise<AssessReport> {
    return this.request("/api/v1/assess", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  compactnessField(req: FieldRequest): Promise<ScalarField2D> {
    const query =
      `alpha_deg=${req.alphaDeg}&rmin=${req.rmin}&rmax=${req.rmax}` +
      `&kmin=${req.kmin}&kmax=${req.kmax}&res=${req.res}`;
    return this.request(`/api/v1/fields/compactness?${query}`);
  }

  contours(req: FieldRequest, levels: number[]): Promise<ContourSet> {
    const query =
      `alpha_deg=${req.alphaDeg}&levels=${levels.join(",")}&rmin=${req.rmin}` +
      `&rmax=${req.rmax}&kmin=${req.kmin}&kmax=${req.kmax}&res=${req.res}`;
    return this.request(`/api/v1/fields/contours?${query}`);
  }
}
