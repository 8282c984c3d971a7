"""Analysis orchestration: top-artist selection, era baselines, per-decade
artist profiles, trajectories, and bundle assembly.

The output of a run is an AnalysisBundle: a fully immutable snapshot that
the CLI persists and the HTTP service serves. Assembly is deterministic
for identical inputs (the creation timestamp aside), which golden-file
tests depend on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from datetime import date, datetime, timezone
from statistics import median
from typing import Sequence

from .ingest import (
    DEFAULT_WINDOW,
    FeatureVector,
    IngestWarning,
    SongRecord,
)
from .metrics import (
    AlignmentMetrics,
    ConstantInput,
    CorrelationResult,
    DegenerateVector,
    TooFewPoints,
    ZeroEraDispersion,
    classify_quadrant,
    centered_cosine,
    contrast_ratio,
    decade_performance_score,
    dispersion,
    pearson,
    artist_rank_score,
    song_contribution,
)

EPOCH_TIMESTAMP = "1970-01-01T00:00:00+00:00"

DEGENERATE_NO_FEATURES = "no_feature_songs"
DEGENERATE_CONSTANT_MEAN = "constant_mean_features"


class AnalysisError(ValueError):
    """Base class for conditions that make the analysis infeasible."""


class InsufficientEraSongs(AnalysisError):
    def __init__(self, decade: str, count: int):
        self.decade = decade
        super().__init__(
            f"decade {decade}: need at least 2 feature-bearing songs to form "
            f"an era baseline, got {count}"
        )


class NoSongs(AnalysisError):
    pass


@dataclass(frozen=True)
class EraBaseline:
    """Per-decade centroid and dispersion over all feature-bearing songs."""

    decade: str
    centroid: FeatureVector
    sigma_era: float
    song_count: int


@dataclass(frozen=True)
class ProfileSong:
    """One song-table row of a profile (aggregates only; weekly entries are
    input-side data and are not persisted in bundles)."""

    title: str
    title_norm: str
    weeks: int
    avg_rank: float
    peak_rank: int
    features: FeatureVector | None


@dataclass(frozen=True)
class ArtistDecadeProfile:
    artist: str
    artist_norm: str
    decade: str
    appearances: int
    distinct_songs: int
    performance_score: float
    mean_features: FeatureVector | None
    sigma_artist: float | None
    alignment: AlignmentMetrics | None
    degenerate_reason: str | None
    songs: tuple[ProfileSong, ...]


@dataclass(frozen=True)
class TrajectoryPoint:
    decade: str
    shape_similarity: float
    contrast_ratio: float


@dataclass(frozen=True)
class Trajectory:
    artist: str
    artist_norm: str
    points: tuple[TrajectoryPoint, ...]


@dataclass(frozen=True)
class RankedArtist:
    name: str
    name_norm: str
    score: float


@dataclass(frozen=True)
class AnalysisWarning:
    code: str
    subject: str
    detail: str


@dataclass(frozen=True)
class AnalysisBundle:
    created_at: str
    window: tuple[date, date]
    artists: tuple[RankedArtist, ...]
    baselines: tuple[EraBaseline, ...]
    profiles: tuple[ArtistDecadeProfile, ...]
    trajectories: tuple[Trajectory, ...]
    median_shape: float | None
    correlation: CorrelationResult | None
    warnings: tuple[AnalysisWarning, ...]


def _mean_vector(vectors: Sequence[FeatureVector]) -> FeatureVector:
    n = len(vectors)
    return FeatureVector(*(math.fsum(v[i] for v in vectors) / n for i in range(5)))


def select_top_artists(songs: Sequence[SongRecord], k: int) -> list[RankedArtist]:
    """Rank artists by their all-time score and keep the first k.

    The score pools every song of the artist across the window. Ties are
    broken by name ascending so the ranking is deterministic.
    """
    by_artist: dict[str, list[SongRecord]] = {}
    display: dict[str, str] = {}
    for record in songs:
        name = record.key.artist_norm
        if name not in by_artist:
            by_artist[name] = []
            display[name] = record.display_artist
        by_artist[name].append(record)

    ranked = [
        RankedArtist(
            name=display[name],
            name_norm=name,
            score=artist_rank_score(
                [song_contribution(s.weeks, s.avg_rank) for s in records],
                len(records),
            ),
        )
        for name, records in by_artist.items()
    ]
    ranked.sort(key=lambda a: (-a.score, a.name))
    return ranked[:k]


def build_era_baseline(decade: str, songs: Sequence[SongRecord]) -> EraBaseline:
    """Centroid and dispersion of a decade over its feature-bearing songs.

    Songs without features are excluded here (they were already warned
    about at ingest time). Fewer than two usable songs, or a set of
    identical vectors, leaves nothing to compare against and is an error.
    """
    vectors = [s.features for s in songs if s.features is not None]
    if len(vectors) < 2:
        raise InsufficientEraSongs(decade, len(vectors))
    sigma = dispersion(vectors)
    if sigma <= 0.0:
        raise ZeroEraDispersion(
            f"decade {decade}: all {len(vectors)} feature vectors are identical"
        )
    return EraBaseline(
        decade=decade,
        centroid=_mean_vector(vectors),
        sigma_era=sigma,
        song_count=len(vectors),
    )


def _profile_songs(songs: Sequence[SongRecord]) -> tuple[ProfileSong, ...]:
    rows = [
        ProfileSong(
            title=s.display_title,
            title_norm=s.key.title_norm,
            weeks=s.weeks,
            avg_rank=s.avg_rank,
            peak_rank=s.peak_rank,
            features=s.features,
        )
        for s in songs
    ]
    rows.sort(key=lambda r: (r.avg_rank, -r.weeks, r.title_norm))
    return tuple(rows)


def build_profile(
    artist: str,
    decade: str,
    songs: Sequence[SongRecord],
    baseline: EraBaseline,
) -> ArtistDecadeProfile:
    """Profile one artist-decade pair against its era baseline.

    The quadrant is left unassigned (None inside alignment) because the
    shape-similarity boundary is the median over the whole bundle, which
    is only known once every profile exists. Degenerate feature data
    flags the profile instead of failing the run.
    """
    if not songs:
        raise NoSongs(f"no songs for {artist!r} in {decade}")
    contributions = [song_contribution(s.weeks, s.avg_rank) for s in songs]
    feature_songs = [s.features for s in songs if s.features is not None]

    mean_features: FeatureVector | None = None
    sigma_artist: float | None = None
    alignment: AlignmentMetrics | None = None
    degenerate_reason: str | None = None
    if feature_songs:
        mean_features = _mean_vector(feature_songs)
        sigma_artist = dispersion(feature_songs)
        try:
            shape = centered_cosine(mean_features, baseline.centroid)
            alignment = AlignmentMetrics(
                shape_similarity=shape,
                contrast_ratio=contrast_ratio(sigma_artist, baseline.sigma_era),
                quadrant=None,
            )
        except DegenerateVector:
            degenerate_reason = DEGENERATE_CONSTANT_MEAN
    else:
        degenerate_reason = DEGENERATE_NO_FEATURES

    return ArtistDecadeProfile(
        artist=artist,
        artist_norm=songs[0].key.artist_norm,
        decade=decade,
        appearances=sum(s.weeks for s in songs),
        distinct_songs=len(songs),
        performance_score=decade_performance_score(contributions, len(songs)),
        mean_features=mean_features,
        sigma_artist=sigma_artist,
        alignment=alignment,
        degenerate_reason=degenerate_reason,
        songs=_profile_songs(songs),
    )


def assemble_bundle(
    records: Sequence[SongRecord],
    k: int = 10,
    *,
    window: tuple[date, date] = DEFAULT_WINDOW,
    min_songs: int = 1,
    ingest_warnings: Sequence[IngestWarning] = (),
    created_at: str | None = None,
) -> AnalysisBundle:
    """Run the whole analysis over joined song records.

    Era baselines are computed from every feature-bearing song in the
    corpus, not only the top-k artists' songs: the baseline is the era's
    norm, not the norm of the artists under study. Baseline errors
    propagate; degenerate profiles are flagged and excluded from the
    median and the correlation but stay in the bundle.
    """
    if not records:
        raise NoSongs("no song records to analyze")
    if created_at is None:
        created_at = datetime.now(timezone.utc).isoformat(timespec="seconds")

    warnings: list[AnalysisWarning] = [
        AnalysisWarning(
            code="missing_features",
            subject=f"{w.key.artist_norm} / {w.key.title_norm}",
            detail=w.reason,
        )
        for w in ingest_warnings
    ]

    ranked = select_top_artists(records, k)

    decades = sorted({r.decade for r in records})
    baselines = tuple(
        build_era_baseline(d, [r for r in records if r.decade == d]) for d in decades
    )
    baseline_by_decade = {b.decade: b for b in baselines}

    by_artist: dict[str, list[SongRecord]] = {}
    for record in records:
        by_artist.setdefault(record.key.artist_norm, []).append(record)

    profiles: list[ArtistDecadeProfile] = []
    for artist in ranked:
        songs = by_artist[artist.name_norm]
        for d in sorted({s.decade for s in songs}):
            decade_songs = [s for s in songs if s.decade == d]
            if len(decade_songs) < min_songs:
                continue
            profiles.append(
                build_profile(artist.name, d, decade_songs, baseline_by_decade[d])
            )
    profiles.sort(key=lambda p: (p.artist_norm, p.decade))

    for p in profiles:
        if p.degenerate_reason is not None:
            warnings.append(
                AnalysisWarning(
                    code="degenerate_profile",
                    subject=f"{p.artist_norm} / {p.decade}",
                    detail=p.degenerate_reason,
                )
            )

    classified = [p for p in profiles if p.alignment is not None]
    median_shape: float | None = None
    if classified:
        median_shape = median(p.alignment.shape_similarity for p in classified)
        profiles = [
            replace(
                p,
                alignment=p.alignment._replace(
                    quadrant=classify_quadrant(
                        p.alignment.shape_similarity,
                        p.alignment.contrast_ratio,
                        median_shape,
                    )
                ),
            )
            if p.alignment is not None
            else p
            for p in profiles
        ]
        classified = [p for p in profiles if p.alignment is not None]

    profile_index: dict[str, list[ArtistDecadeProfile]] = {}
    for p in classified:
        profile_index.setdefault(p.artist_norm, []).append(p)
    trajectories = tuple(
        Trajectory(
            artist=artist.name,
            artist_norm=artist.name_norm,
            points=tuple(
                TrajectoryPoint(
                    decade=p.decade,
                    shape_similarity=p.alignment.shape_similarity,
                    contrast_ratio=p.alignment.contrast_ratio,
                )
                for p in sorted(
                    profile_index.get(artist.name_norm, []), key=lambda p: p.decade
                )
            ),
        )
        for artist in ranked
    )

    correlation: CorrelationResult | None = None
    try:
        correlation = pearson(
            [p.alignment.shape_similarity for p in classified],
            [p.alignment.contrast_ratio for p in classified],
        )
    except (TooFewPoints, ConstantInput) as exc:
        warnings.append(
            AnalysisWarning(
                code="correlation_skipped",
                subject="shape vs contrast",
                detail=str(exc),
            )
        )

    return AnalysisBundle(
        created_at=created_at,
        window=window,
        artists=tuple(ranked),
        baselines=baselines,
        profiles=tuple(profiles),
        trajectories=trajectories,
        median_shape=median_shape,
        correlation=correlation,
        warnings=tuple(warnings),
    )
