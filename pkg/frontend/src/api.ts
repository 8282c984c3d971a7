import type {
  ProfileDetail,
  RankedArtist,
  SongSignature,
  Summary,
  Trajectory,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

/** Minimal slice of fetch the client needs; tests substitute a fixture-backed one. */
export interface FetchResponse {
  ok: boolean;
  status: number;
  json(): Promise<unknown>;
}
export type FetchLike = (url: string) => Promise<FetchResponse>;

export function trajectoryPath(artist: string): string {
  return `/api/artists/${encodeURIComponent(artist)}/trajectory`;
}

export function profilePath(artist: string, decade: string): string {
  return `/api/artists/${encodeURIComponent(artist)}/decades/${encodeURIComponent(decade)}`;
}

export function songPath(artist: string, decade: string, title: string): string {
  return `${profilePath(artist, decade)}/songs/${encodeURIComponent(title)}`;
}

export class ApiClient {
  constructor(
    private readonly fetchImpl: FetchLike,
    private readonly baseUrl = "",
  ) {}

  private async get<T>(path: string): Promise<T> {
    const resp = await this.fetchImpl(this.baseUrl + path);
    if (!resp.ok) {
      let code = "unknown";
      let message = `request failed with status ${resp.status}`;
      try {
        const body = (await resp.json()) as { code?: string; message?: string };
        if (body.code) code = body.code;
        if (body.message) message = body.message;
      } catch {
        // non-JSON error body; keep the generic message
      }
      throw new ApiError(resp.status, code, message);
    }
    return (await resp.json()) as T;
  }

  summary(): Promise<Summary> {
    return this.get("/api/summary");
  }

  artists(): Promise<RankedArtist[]> {
    return this.get("/api/artists");
  }

  trajectory(artist: string): Promise<Trajectory> {
    return this.get(trajectoryPath(artist));
  }

  profile(artist: string, decade: string): Promise<ProfileDetail> {
    return this.get(profilePath(artist, decade));
  }

  songSignature(artist: string, decade: string, title: string): Promise<SongSignature> {
    return this.get(songPath(artist, decade, title));
  }
}
