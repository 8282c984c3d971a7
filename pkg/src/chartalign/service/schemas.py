"""Pydantic request/response models for the read-only API."""

from __future__ import annotations

from pydantic import BaseModel


class WindowOut(BaseModel):
    start: str
    end: str


class CorrelationOut(BaseModel):
    r: float
    p_two_sided: float
    n: int


class SummaryOut(BaseModel):
    window: WindowOut
    artist_count: int
    profile_count: int
    median_shape: float | None
    correlation: CorrelationOut | None


class RankedArtistOut(BaseModel):
    name: str
    name_norm: str
    score: float


class TrajectoryPointOut(BaseModel):
    decade: str
    shape_similarity: float
    contrast_ratio: float


class DecadeBubbleOut(BaseModel):
    """Per-decade bubble payload; degenerate decades appear here even
    though they have no quadrant point."""

    decade: str
    appearances: int
    distinct_songs: int
    performance_score: float
    degenerate: bool
    degenerate_reason: str | None


class TrajectoryOut(BaseModel):
    artist: str
    artist_norm: str
    points: list[TrajectoryPointOut]
    decades: list[DecadeBubbleOut]


class AlignmentOut(BaseModel):
    shape_similarity: float
    contrast_ratio: float
    quadrant: str


class SongRowOut(BaseModel):
    title: str
    title_norm: str
    weeks: int
    avg_rank: float
    peak_rank: int
    has_features: bool


class ProfileDetailOut(BaseModel):
    artist: str
    artist_norm: str
    decade: str
    appearances: int
    distinct_songs: int
    performance_score: float
    alignment: AlignmentOut | None
    degenerate_reason: str | None
    mean_features: list[float] | None
    era_centroid: list[float]
    deviation: list[float] | None
    songs: list[SongRowOut]


class RadarOut(BaseModel):
    feature_order: list[str]
    era: list[float]
    artist: list[float]
    song: list[float]


class SongSignatureOut(BaseModel):
    artist: str
    decade: str
    title: str
    title_norm: str
    deviation: list[float]
    radar: RadarOut


class ApiErrorOut(BaseModel):
    status: int
    code: str
    message: str
