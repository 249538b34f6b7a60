// Typed client for the pumplab HTTP JSON service. Every call is appended to
// `log`, so tests can verify that displayed facts trace back to service
// responses rather than local computation.

export interface MembershipResponse {
  member: boolean;
}

export interface StringsResponse {
  strings: string[];
  epsilon_flags: boolean[];
  next_offset: number;
  exhausted: boolean;
}

export interface SplitDto {
  x: string;
  y: string;
  z: string;
}

export interface MplResponse {
  p: number;
  witness: string | null;
  split: SplitDto | null;
  mode: string;
  counterexample: string | null;
}

export interface PumpResponse {
  pumped: string;
  member: boolean;
}

export interface ApiErrorBody {
  code: "syntax_error" | "resource_limit" | "bad_request";
  message: string;
  position?: number;
}

export class ApiRequestError extends Error {
  constructor(
    readonly status: number,
    readonly detail: ApiErrorBody | null,
  ) {
    super(detail ? detail.message : `request failed with status ${status}`);
  }
}

export interface RequestLogEntry {
  method: string;
  path: string;
  body?: unknown;
}

export class ApiClient {
  readonly log: RequestLogEntry[] = [];

  constructor(private readonly baseUrl: string) {}

  membership(regex: string, input: string): Promise<MembershipResponse> {
    return this.post("/api/membership", { regex, input });
  }

  strings(regex: string, count: number, offset: number): Promise<StringsResponse> {
    return this.post("/api/strings", { regex, count, offset });
  }

  mpl(regex: string, mode: "exact" | "sampled" = "exact"): Promise<MplResponse> {
    return this.post("/api/mpl", { regex, mode });
  }

  pump(regex: string, x: string, y: string, z: string, i: number): Promise<PumpResponse> {
    return this.post("/api/pump", { regex, x, y, z, i });
  }

  async health(): Promise<boolean> {
    this.log.push({ method: "GET", path: "/api/health" });
    const resp = await fetch(this.baseUrl + "/api/health");
    return resp.ok;
  }

  private async post<T>(path: string, body: unknown): Promise<T> {
    this.log.push({ method: "POST", path, body });
    const resp = await fetch(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!resp.ok) {
      let detail: ApiErrorBody | null = null;
      try {
        detail = (await resp.json()) as ApiErrorBody;
      } catch {
        detail = null;
      }
      throw new ApiRequestError(resp.status, detail);
    }
    return (await resp.json()) as T;
  }
}
