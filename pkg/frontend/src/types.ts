/** Payload shapes of the read-only analysis API. The UI never computes
 * metrics itself; every number on screen comes from these payloads. */

export interface AnalysisWindow {
  start: string;
  end: string;
}

export interface Correlation {
  r: number;
  p_two_sided: number;
  n: number;
}

export interface Summary {
  window: AnalysisWindow;
  artist_count: number;
  profile_count: number;
  median_shape: number | null;
  correlation: Correlation | null;
}

export interface RankedArtist {
  name: string;
  name_norm: string;
  score: number;
}

export interface TrajectoryPoint {
  decade: string;
  shape_similarity: number;
  contrast_ratio: number;
}

export interface DecadeBubble {
  decade: string;
  appearances: number;
  distinct_songs: number;
  performance_score: number;
  degenerate: boolean;
  degenerate_reason: string | null;
}

export interface Trajectory {
  artist: string;
  artist_norm: string;
  points: TrajectoryPoint[];
  decades: DecadeBubble[];
}

export interface Alignment {
  shape_similarity: number;
  contrast_ratio: number;
  quadrant: string;
}

export interface SongRow {
  title: string;
  title_norm: string;
  weeks: number;
  avg_rank: number;
  peak_rank: number;
  has_features: boolean;
}

export interface ProfileDetail {
  artist: string;
  artist_norm: string;
  decade: string;
  appearances: number;
  distinct_songs: number;
  performance_score: number;
  alignment: Alignment | null;
  degenerate_reason: string | null;
  mean_features: number[] | null;
  era_centroid: number[];
  deviation: number[] | null;
  songs: SongRow[];
}

export interface Radar {
  feature_order: string[];
  era: number[];
  artist: number[];
  song: number[];
}

export interface SongSignature {
  artist: string;
  decade: string;
  title: string;
  title_norm: string;
  deviation: number[];
  radar: Radar;
}

export interface ApiErrorBody {
  status: number;
  code: string;
  message: string;
}
