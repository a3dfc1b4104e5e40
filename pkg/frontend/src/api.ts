/**
 * Typed client for the ranking service.
 *
 * One in-flight request per endpoint: starting a new call aborts the previous
 * one (newest wins), so a fast slider drag can never interleave responses.
 */

export type Direction = "benefit" | "cost";
export type Method = "atopsis" | "hellinger";

export interface RankRequest {
  algorithms: string[];
  benchmarks: string[];
  mu: number[][];
  sigma: number[][];
  weights: { w_mu: number };
  direction?: Direction;
  normalization?: "vector" | "max";
  method?: Method;
  sigma_floor?: number;
  tie_epsilon?: number;
}

export interface RankResponse {
  order: string[];
  xi: Record<string, number>;
  ties: string[][];
  stage1: { xi_mu: Record<string, number>; xi_sigma: Record<string, number> } | null;
}

export interface SweepEntry {
  w_mu: number;
  order: string[];
  xi: Record<string, number>;
}

export interface SweepResponse {
  grid: number[];
  rankings: SweepEntry[];
  stability_w_mu: number | null;
}

export class ApiError extends Error {
  constructor(
    message: string,
    readonly status: number,
    readonly field: string | null = null,
  ) {
    super(message);
  }
}

/** Thrown internally when a newer request replaced this one. */
export class SupersededError extends Error {
  constructor() {
    super("request superseded by a newer one");
  }
}

export class ApiClient {
  private controllers = new Map<string, AbortController>();

  constructor(readonly baseUrl: string = "") {}

  async rank(request: RankRequest): Promise<RankResponse> {
    return this.post<RankResponse>("/api/rank", request);
  }

  async sweep(request: RankRequest & { grid: number[] }): Promise<SweepResponse> {
    return this.post<SweepResponse>("/api/sweep", request);
  }

  private async post<T>(path: string, body: unknown): Promise<T> {
    this.controllers.get(path)?.abort();
    const controller = new AbortController();
    this.controllers.set(path, controller);

    let response: Response;
    try {
      response = await fetch(this.baseUrl + path, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(body),
        signal: controller.signal,
      });
    } catch (err) {
      if (controller.signal.aborted) throw new SupersededError();
      throw new ApiError(`service unreachable: ${String(err)}`, 0);
    }
    if (controller.signal.aborted) throw new SupersededError();
    if (!response.ok) {
      let message = `HTTP ${response.status}`;
      let field: string | null = null;
      try {
        const payload = await response.json();
        if (payload && typeof payload.error === "string") message = payload.error;
        if (payload && typeof payload.field === "string") field = payload.field;
      } catch {
        // non-JSON error body: keep the status text
      }
      throw new ApiError(message, response.status, field);
    }
    return (await response.json()) as T;
  }
}
