"""Canonical bundle serialization.

A bundle is persisted as one JSON document: keys sorted, compact
separators, UTF-8, floats in Python's shortest round-trip form, and a
trailing newline. Identical bundles therefore serialize to identical
bytes, which the golden-file and determinism tests rely on. The document
layout is described in bundle.schema.json at the repository root.
"""

from __future__ import annotations

import json
from datetime import date
from pathlib import Path
from typing import Any

from .ingest import FeatureVector
from .metrics import AlignmentMetrics, CorrelationResult, Quadrant
from .profiles import (
    AnalysisBundle,
    AnalysisWarning,
    ArtistDecadeProfile,
    EraBaseline,
    ProfileSong,
    RankedArtist,
    Trajectory,
    TrajectoryPoint,
)


class BundleFormatError(ValueError):
    """Raised when a document does not look like a serialized bundle."""


def to_document(bundle: AnalysisBundle) -> dict[str, Any]:
    """Convert a bundle to a JSON-ready dict."""
    return {
        "created_at": bundle.created_at,
        "window": {
            "start": bundle.window[0].isoformat(),
            "end": bundle.window[1].isoformat(),
        },
        "artists": [
            {"name": a.name, "name_norm": a.name_norm, "score": a.score}
            for a in bundle.artists
        ],
        "baselines": [
            {
                "decade": b.decade,
                "centroid": list(b.centroid),
                "sigma_era": b.sigma_era,
                "song_count": b.song_count,
            }
            for b in bundle.baselines
        ],
        "profiles": [_profile_doc(p) for p in bundle.profiles],
        "trajectories": [
            {
                "artist": t.artist,
                "artist_norm": t.artist_norm,
                "points": [
                    {
                        "decade": pt.decade,
                        "shape_similarity": pt.shape_similarity,
                        "contrast_ratio": pt.contrast_ratio,
                    }
                    for pt in t.points
                ],
            }
            for t in bundle.trajectories
        ],
        "median_shape": bundle.median_shape,
        "correlation": (
            None
            if bundle.correlation is None
            else {
                "r": bundle.correlation.r,
                "p_two_sided": bundle.correlation.p_two_sided,
                "n": bundle.correlation.n,
            }
        ),
        "warnings": [
            {"code": w.code, "subject": w.subject, "detail": w.detail}
            for w in bundle.warnings
        ],
    }


def _profile_doc(p: ArtistDecadeProfile) -> dict[str, Any]:
    return {
        "artist": p.artist,
        "artist_norm": p.artist_norm,
        "decade": p.decade,
        "appearances": p.appearances,
        "distinct_songs": p.distinct_songs,
        "performance_score": p.performance_score,
        "mean_features": None if p.mean_features is None else list(p.mean_features),
        "sigma_artist": p.sigma_artist,
        "alignment": (
            None
            if p.alignment is None
            else {
                "shape_similarity": p.alignment.shape_similarity,
                "contrast_ratio": p.alignment.contrast_ratio,
                "quadrant": (
                    None if p.alignment.quadrant is None else p.alignment.quadrant.value
                ),
            }
        ),
        "degenerate_reason": p.degenerate_reason,
        "songs": [
            {
                "title": s.title,
                "title_norm": s.title_norm,
                "weeks": s.weeks,
                "avg_rank": s.avg_rank,
                "peak_rank": s.peak_rank,
                "features": None if s.features is None else list(s.features),
            }
            for s in p.songs
        ],
    }


def dumps(bundle: AnalysisBundle) -> str:
    """Serialize to the canonical single-line JSON form."""
    return (
        json.dumps(
            to_document(bundle),
            sort_keys=True,
            separators=(",", ":"),
            ensure_ascii=False,
        )
        + "\n"
    )


def _require(doc: dict, key: str) -> Any:
    if key not in doc:
        raise BundleFormatError(f"bundle document missing key {key!r}")
    return doc[key]


def _vector(values: Any) -> FeatureVector:
    if not isinstance(values, list) or len(values) != 5:
        raise BundleFormatError(f"feature vector must have 5 components, got {values!r}")
    return FeatureVector(*(float(v) for v in values))


def from_document(doc: Any) -> AnalysisBundle:
    """Rebuild a bundle from a parsed JSON document."""
    if not isinstance(doc, dict):
        raise BundleFormatError("bundle document must be a JSON object")
    try:
        window_doc = _require(doc, "window")
        window = (
            date.fromisoformat(window_doc["start"]),
            date.fromisoformat(window_doc["end"]),
        )
        artists = tuple(
            RankedArtist(name=a["name"], name_norm=a["name_norm"], score=a["score"])
            for a in _require(doc, "artists")
        )
        baselines = tuple(
            EraBaseline(
                decade=b["decade"],
                centroid=_vector(b["centroid"]),
                sigma_era=b["sigma_era"],
                song_count=b["song_count"],
            )
            for b in _require(doc, "baselines")
        )
        profiles = tuple(_profile_from(p) for p in _require(doc, "profiles"))
        trajectories = tuple(
            Trajectory(
                artist=t["artist"],
                artist_norm=t["artist_norm"],
                points=tuple(
                    TrajectoryPoint(
                        decade=pt["decade"],
                        shape_similarity=pt["shape_similarity"],
                        contrast_ratio=pt["contrast_ratio"],
                    )
                    for pt in t["points"]
                ),
            )
            for t in _require(doc, "trajectories")
        )
        corr_doc = _require(doc, "correlation")
        correlation = (
            None
            if corr_doc is None
            else CorrelationResult(
                r=corr_doc["r"], p_two_sided=corr_doc["p_two_sided"], n=corr_doc["n"]
            )
        )
        warnings = tuple(
            AnalysisWarning(code=w["code"], subject=w["subject"], detail=w["detail"])
            for w in _require(doc, "warnings")
        )
        return AnalysisBundle(
            created_at=_require(doc, "created_at"),
            window=window,
            artists=artists,
            baselines=baselines,
            profiles=profiles,
            trajectories=trajectories,
            median_shape=_require(doc, "median_shape"),
            correlation=correlation,
            warnings=warnings,
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, BundleFormatError):
            raise
        raise BundleFormatError(f"malformed bundle document: {exc}") from exc


def _profile_from(p: dict) -> ArtistDecadeProfile:
    alignment_doc = p["alignment"]
    alignment = None
    if alignment_doc is not None:
        quadrant = alignment_doc["quadrant"]
        alignment = AlignmentMetrics(
            shape_similarity=alignment_doc["shape_similarity"],
            contrast_ratio=alignment_doc["contrast_ratio"],
            quadrant=None if quadrant is None else Quadrant(quadrant),
        )
    return ArtistDecadeProfile(
        artist=p["artist"],
        artist_norm=p["artist_norm"],
        decade=p["decade"],
        appearances=p["appearances"],
        distinct_songs=p["distinct_songs"],
        performance_score=p["performance_score"],
        mean_features=(
            None if p["mean_features"] is None else _vector(p["mean_features"])
        ),
        sigma_artist=p["sigma_artist"],
        alignment=alignment,
        degenerate_reason=p["degenerate_reason"],
        songs=tuple(
            ProfileSong(
                title=s["title"],
                title_norm=s["title_norm"],
                weeks=s["weeks"],
                avg_rank=s["avg_rank"],
                peak_rank=s["peak_rank"],
                features=None if s["features"] is None else _vector(s["features"]),
            )
            for s in p["songs"]
        ),
    )


def loads(text: str) -> AnalysisBundle:
    """Parse canonical JSON text back into a bundle."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BundleFormatError(f"invalid JSON: {exc}") from exc
    return from_document(doc)


def load_file(path: str | Path) -> AnalysisBundle:
    return loads(Path(path).read_text(encoding="utf-8"))


def dump_file(bundle: AnalysisBundle, path: str | Path) -> None:
    Path(path).write_text(dumps(bundle), encoding="utf-8")
