"""CSV ingestion: parse, validate, join, and aggregate chart data.

Two inputs, both strict CSV with exact case-sensitive headers:

* charts: ``week,rank,artist,song`` -- one row per weekly chart entry.
* features: ``artist,song,valence,energy,danceability,acousticness,liveness``
  -- one row per song, every feature in [0, 1].

Join keys are normalized conservatively (lowercase, whitespace collapse);
anything fancier would hide join failures, which instead surface as
missing-feature warnings. All returned values are immutable.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from datetime import date, datetime
from typing import IO, Iterable, NamedTuple, Sequence

CHARTS_HEADER = ["week", "rank", "artist", "song"]
FEATURES_HEADER = [
    "artist",
    "song",
    "valence",
    "energy",
    "danceability",
    "acousticness",
    "liveness",
]
FEATURE_NAMES = ("valence", "energy", "danceability", "acousticness", "liveness")

DEFAULT_WINDOW = (date(1960, 1, 1), date(2019, 12, 31))


class IngestError(ValueError):
    """Base class for input validation failures; message names the line."""


class MalformedHeader(IngestError):
    pass


class MalformedRow(IngestError):
    pass


class BadRank(IngestError):
    pass


class BadDate(IngestError):
    pass


class DuplicateEntry(IngestError):
    pass


class FeatureOutOfRange(IngestError):
    pass


class DuplicateKey(IngestError):
    pass


class EmptyEntries(IngestError):
    pass


class ChartEntry(NamedTuple):
    """One weekly chart observation, fields as they appear in the CSV."""

    week: date
    rank: int
    artist: str
    song: str


class FeatureVector(NamedTuple):
    """The five audio features, always in this order."""

    valence: float
    energy: float
    danceability: float
    acousticness: float
    liveness: float


class SongKey(NamedTuple):
    artist_norm: str
    title_norm: str


@dataclass(frozen=True)
class SongRecord:
    """A distinct song with its charting aggregates and (optional) features."""

    key: SongKey
    display_artist: str
    display_title: str
    features: FeatureVector | None
    weeks: int
    avg_rank: float
    peak_rank: int
    decade: str
    entries: tuple[ChartEntry, ...]


@dataclass(frozen=True)
class IngestWarning:
    key: SongKey
    reason: str


def normalize_text(text: str) -> str:
    """Lowercase, trim, and collapse internal whitespace runs to one space."""
    return " ".join(text.split()).lower()


def normalize_key(artist: str, title: str) -> SongKey:
    """Join key for chart rows and feature rows; idempotent."""
    return SongKey(normalize_text(artist), normalize_text(title))


def decade_label(d: date) -> str:
    return f"{(d.year // 10) * 10}s"


def assign_decade(entries: Sequence[ChartEntry]) -> str:
    """Decade of the song's earliest chart week (boundary-straddling songs
    belong to the decade they first charted in)."""
    if not entries:
        raise EmptyEntries("cannot assign a decade to an empty entry list")
    return decade_label(min(e.week for e in entries))


def _text_reader(source: IO[bytes] | IO[str] | bytes | str) -> IO[str]:
    if isinstance(source, bytes):
        return io.StringIO(source.decode("utf-8"))
    if isinstance(source, str):
        return io.StringIO(source)
    raw = source.read()
    if isinstance(raw, bytes):
        raw = raw.decode("utf-8")
    return io.StringIO(raw)


def _check_header(row: list[str] | None, expected: list[str], what: str) -> None:
    if row != expected:
        raise MalformedHeader(
            f"{what} header must be exactly {','.join(expected)}, "
            f"got {','.join(row) if row else '<empty file>'}"
        )


def parse_charts(
    source: IO[bytes] | IO[str] | bytes | str,
    window: tuple[date, date] = DEFAULT_WINDOW,
) -> list[ChartEntry]:
    """Parse the weekly chart CSV into validated entries, in file order.

    Rejects ranks outside [1, 100], weeks outside the analysis window,
    and rows that repeat an (artist, song, week) triple after key
    normalization. Error messages carry the 1-based line number.
    """
    reader = csv.reader(_text_reader(source))
    header = next(reader, None)
    _check_header(header, CHARTS_HEADER, "charts")
    start, end = window
    entries: list[ChartEntry] = []
    seen: dict[tuple[SongKey, date], int] = {}
    for lineno, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != 4:
            raise MalformedRow(f"line {lineno}: expected 4 fields, got {len(row)}")
        week_text, rank_text, artist, song = row
        try:
            week = datetime.strptime(week_text, "%Y-%m-%d").date()
        except ValueError:
            raise BadDate(f"line {lineno}: unparseable week {week_text!r}") from None
        if not start <= week <= end:
            raise BadDate(
                f"line {lineno}: week {week.isoformat()} outside analysis window "
                f"{start.isoformat()}..{end.isoformat()}"
            )
        try:
            rank = int(rank_text)
        except ValueError:
            raise BadRank(f"line {lineno}: non-integer rank {rank_text!r}") from None
        if not 1 <= rank <= 100:
            raise BadRank(f"line {lineno}: rank {rank} outside [1, 100]")
        dup_key = (normalize_key(artist, song), week)
        if dup_key in seen:
            raise DuplicateEntry(
                f"line {lineno}: duplicate entry for {artist!r} / {song!r} on "
                f"{week.isoformat()} (first seen on line {seen[dup_key]})"
            )
        seen[dup_key] = lineno
        entries.append(ChartEntry(week=week, rank=rank, artist=artist, song=song))
    return entries


def dump_charts(entries: Iterable[ChartEntry]) -> str:
    """Inverse of parse_charts: emit the exact CSV format."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CHARTS_HEADER)
    for e in entries:
        writer.writerow([e.week.isoformat(), e.rank, e.artist, e.song])
    return buf.getvalue()


def parse_features(
    source: IO[bytes] | IO[str] | bytes | str,
) -> dict[SongKey, FeatureVector]:
    """Parse the per-song audio feature CSV into a key -> vector map.

    Two rows that normalize to the same key are a DuplicateKey error even
    if their raw spellings differ.
    """
    reader = csv.reader(_text_reader(source))
    header = next(reader, None)
    _check_header(header, FEATURES_HEADER, "features")
    features: dict[SongKey, FeatureVector] = {}
    first_line: dict[SongKey, int] = {}
    for lineno, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != 7:
            raise MalformedRow(f"line {lineno}: expected 7 fields, got {len(row)}")
        artist, song = row[0], row[1]
        values = []
        for name, text in zip(FEATURE_NAMES, row[2:]):
            try:
                value = float(text)
            except ValueError:
                raise FeatureOutOfRange(
                    f"line {lineno}, column {name}: non-numeric value {text!r}"
                ) from None
            if not 0.0 <= value <= 1.0:
                raise FeatureOutOfRange(
                    f"line {lineno}, column {name}: value {value} outside [0, 1]"
                )
            values.append(value)
        key = normalize_key(artist, song)
        if key in features:
            raise DuplicateKey(
                f"line {lineno}: duplicate song key {key.artist_norm!r} / "
                f"{key.title_norm!r} (first seen on line {first_line[key]})"
            )
        features[key] = FeatureVector(*values)
        first_line[key] = lineno
    return features


def build_song_records(
    charts: Sequence[ChartEntry],
    features: dict[SongKey, FeatureVector],
) -> tuple[list[SongRecord], list[IngestWarning]]:
    """Join chart entries with features into one record per distinct song.

    Songs missing from the feature map stay in the output (their chart
    aggregates are still meaningful) but carry features=None and produce
    a warning. Display names come from the first chart row encountered.
    """
    grouped: dict[SongKey, list[ChartEntry]] = {}
    for entry in charts:
        key = normalize_key(entry.artist, entry.song)
        grouped.setdefault(key, []).append(entry)

    records: list[SongRecord] = []
    warnings: list[IngestWarning] = []
    for key, entries in grouped.items():
        ranks = [e.rank for e in entries]
        vector = features.get(key)
        if vector is None:
            warnings.append(
                IngestWarning(key=key, reason="no feature row for this song")
            )
        records.append(
            SongRecord(
                key=key,
                display_artist=entries[0].artist,
                display_title=entries[0].song,
                features=vector,
                weeks=len(entries),
                avg_rank=sum(ranks) / len(ranks),
                peak_rank=min(ranks),
                decade=assign_decade(entries),
                entries=tuple(entries),
            )
        )
    return records, warnings
