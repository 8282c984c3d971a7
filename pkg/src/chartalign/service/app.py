"""Read-only HTTP API over one loaded analysis bundle.

The bundle is handed to the app factory once; request handlers only read
from prebuilt lookup tables over that immutable snapshot, so identical
requests always produce identical responses and no locking is needed.
"""

from __future__ import annotations

import re
from pathlib import Path

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from ..ingest import FEATURE_NAMES, normalize_text
from ..metrics import deviation
from ..profiles import AnalysisBundle, ArtistDecadeProfile, ProfileSong
from . import schemas

_DECADE_RE = re.compile(r"^\d{4}s$")


class ApiError(Exception):
    """Maps to the documented error body: status + machine code + message."""

    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


def _not_found(message: str) -> ApiError:
    return ApiError(404, "not_found", message)


class _BundleIndex:
    """Lookup tables the handlers read from; built once at startup."""

    def __init__(self, bundle: AnalysisBundle):
        self.bundle = bundle
        self.baseline_by_decade = {b.decade: b for b in bundle.baselines}
        self.profiles_by_artist: dict[str, list[ArtistDecadeProfile]] = {}
        self.profile_by_key: dict[tuple[str, str], ArtistDecadeProfile] = {}
        for p in bundle.profiles:
            self.profiles_by_artist.setdefault(p.artist_norm, []).append(p)
            self.profile_by_key[(p.artist_norm, p.decade)] = p
        self.trajectory_by_artist = {t.artist_norm: t for t in bundle.trajectories}

    def artist_profiles(self, artist: str) -> list[ArtistDecadeProfile]:
        profiles = self.profiles_by_artist.get(normalize_text(artist))
        if profiles is None:
            raise _not_found(f"unknown artist {artist!r}")
        return profiles

    def profile(self, artist: str, decade: str) -> ArtistDecadeProfile:
        if not _DECADE_RE.fullmatch(decade):
            raise ApiError(400, "bad_request", f"malformed decade label {decade!r}")
        key = (normalize_text(artist), decade)
        profile = self.profile_by_key.get(key)
        if profile is None:
            raise _not_found(f"no profile for artist {artist!r} in {decade}")
        return profile

    def song(self, profile: ArtistDecadeProfile, title: str) -> ProfileSong:
        wanted = normalize_text(title)
        for song in profile.songs:
            if song.title_norm == wanted:
                return song
        raise _not_found(
            f"no song {title!r} for {profile.artist_norm!r} in {profile.decade}"
        )


def _alignment_out(p: ArtistDecadeProfile) -> schemas.AlignmentOut | None:
    if p.alignment is None or p.alignment.quadrant is None:
        return None
    return schemas.AlignmentOut(
        shape_similarity=p.alignment.shape_similarity,
        contrast_ratio=p.alignment.contrast_ratio,
        quadrant=p.alignment.quadrant.value,
    )


def create_app(
    bundle: AnalysisBundle, static_dir: str | Path | None = None
) -> FastAPI:
    """Build the API app for one immutable bundle.

    When static_dir is given, the built web UI is served from the same
    origin under "/"; otherwise CORS stays permissive so a separately
    served UI can talk to the API during development.
    """
    app = FastAPI(title="chartalign", docs_url="/api/docs", openapi_url="/api/openapi.json")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET"],
        allow_headers=["*"],
    )
    index = _BundleIndex(bundle)

    @app.exception_handler(ApiError)
    async def handle_api_error(_request, exc: ApiError):
        return JSONResponse(
            status_code=exc.status,
            content={"status": exc.status, "code": exc.code, "message": exc.message},
        )

    @app.get("/api/summary", response_model=schemas.SummaryOut)
    def get_summary():
        b = index.bundle
        return schemas.SummaryOut(
            window=schemas.WindowOut(
                start=b.window[0].isoformat(), end=b.window[1].isoformat()
            ),
            artist_count=len(b.artists),
            profile_count=len(b.profiles),
            median_shape=b.median_shape,
            correlation=(
                None
                if b.correlation is None
                else schemas.CorrelationOut(
                    r=b.correlation.r,
                    p_two_sided=b.correlation.p_two_sided,
                    n=b.correlation.n,
                )
            ),
        )

    @app.get("/api/artists", response_model=list[schemas.RankedArtistOut])
    def get_artists():
        return [
            schemas.RankedArtistOut(name=a.name, name_norm=a.name_norm, score=a.score)
            for a in index.bundle.artists
        ]

    @app.get("/api/artists/{artist}/trajectory", response_model=schemas.TrajectoryOut)
    def get_trajectory(artist: str):
        profiles = index.artist_profiles(artist)
        trajectory = index.trajectory_by_artist.get(profiles[0].artist_norm)
        points = [] if trajectory is None else trajectory.points
        return schemas.TrajectoryOut(
            artist=profiles[0].artist,
            artist_norm=profiles[0].artist_norm,
            points=[
                schemas.TrajectoryPointOut(
                    decade=pt.decade,
                    shape_similarity=pt.shape_similarity,
                    contrast_ratio=pt.contrast_ratio,
                )
                for pt in points
            ],
            decades=[
                schemas.DecadeBubbleOut(
                    decade=p.decade,
                    appearances=p.appearances,
                    distinct_songs=p.distinct_songs,
                    performance_score=p.performance_score,
                    degenerate=p.degenerate_reason is not None,
                    degenerate_reason=p.degenerate_reason,
                )
                for p in sorted(profiles, key=lambda p: p.decade)
            ],
        )

    @app.get(
        "/api/artists/{artist}/decades/{decade}",
        response_model=schemas.ProfileDetailOut,
    )
    def get_profile(artist: str, decade: str):
        p = index.profile(artist, decade)
        centroid = index.baseline_by_decade[p.decade].centroid
        return schemas.ProfileDetailOut(
            artist=p.artist,
            artist_norm=p.artist_norm,
            decade=p.decade,
            appearances=p.appearances,
            distinct_songs=p.distinct_songs,
            performance_score=p.performance_score,
            alignment=_alignment_out(p),
            degenerate_reason=p.degenerate_reason,
            mean_features=None if p.mean_features is None else list(p.mean_features),
            era_centroid=list(centroid),
            deviation=(
                None
                if p.mean_features is None
                else list(deviation(p.mean_features, centroid))
            ),
            songs=[
                schemas.SongRowOut(
                    title=s.title,
                    title_norm=s.title_norm,
                    weeks=s.weeks,
                    avg_rank=s.avg_rank,
                    peak_rank=s.peak_rank,
                    has_features=s.features is not None,
                )
                for s in p.songs
            ],
        )

    @app.get(
        "/api/artists/{artist}/decades/{decade}/songs/{title}",
        response_model=schemas.SongSignatureOut,
    )
    def get_song_signature(artist: str, decade: str, title: str):
        p = index.profile(artist, decade)
        song = index.song(p, title)
        if song.features is None:
            raise ApiError(
                422,
                "degenerate_profile",
                f"song {song.title!r} has no audio features; no signature available",
            )
        centroid = index.baseline_by_decade[p.decade].centroid
        assert p.mean_features is not None  # a feature-bearing song implies a mean
        return schemas.SongSignatureOut(
            artist=p.artist,
            decade=p.decade,
            title=song.title,
            title_norm=song.title_norm,
            deviation=list(deviation(song.features, centroid)),
            radar=schemas.RadarOut(
                feature_order=list(FEATURE_NAMES),
                era=list(centroid),
                artist=list(p.mean_features),
                song=list(song.features),
            ),
        )

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app
