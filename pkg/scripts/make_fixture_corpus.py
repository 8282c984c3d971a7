#!/usr/bin/env python3
"""Regenerate the committed synthetic test corpus (50 songs, 5 artists,
3 decades) at tests/fixtures/{charts,features}.csv.

The corpus is seeded and fully deterministic. It deliberately contains:

* an artist active in all three decades and one with a decade gap,
* one song whose chart run straddles the 1989/1990 boundary (assigned to
  the 1980s via its earliest week),
* three songs tied at avg rank 15.0 to pin down song-table ordering,
* one song with no feature row (missing-feature warning path),
* one artist-decade whose songs all share the constant vector 0.5
  (degenerate profile path),
* a song title differing in case between the two CSVs, and a chart row
  with doubled spaces in the artist name (join-normalization paths),
* one non-ASCII title (UTF-8 and URL-encoding paths).
"""

from __future__ import annotations

import csv
import random
from datetime import date, timedelta
from pathlib import Path

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

rng = random.Random(20259)

DECADE_START = {"1980s": date(1980, 3, 1), "1990s": date(1990, 3, 1), "2000s": date(2000, 3, 1)}

# style centers per artist-decade; per-song jitter width controls how
# dispersed the artist is relative to the era (drives contrast ratio)
PLAN = [
    # (artist, decade, n_songs, style center, jitter width)
    ("Nova Reyes", "1980s", 4, (0.62, 0.71, 0.66, 0.18, 0.15), 0.13),
    ("Nova Reyes", "1990s", 6, (0.55, 0.78, 0.72, 0.12, 0.17), 0.13),
    ("Nova Reyes", "2000s", 4, (0.48, 0.82, 0.75, 0.09, 0.20), 0.34),
    ("The Gilded Hours", "1980s", 6, (0.41, 0.52, 0.47, 0.44, 0.12), 0.13),
    ("The Gilded Hours", "1990s", 5, (0.38, 0.49, 0.45, 0.51, 0.11), 0.13),
    ("Cass Marlow", "2000s", 8, (0.70, 0.44, 0.58, 0.30, 0.24), 0.46),
    ("Dru Holloway", "1990s", 5, None, 0.0),  # constant 0.5 vectors -> degenerate
    ("Dru Holloway", "2000s", 5, (0.33, 0.61, 0.52, 0.26, 0.31), 0.13),
    ("Echo Petty", "1980s", 4, (0.57, 0.35, 0.40, 0.58, 0.19), 0.33),
    ("Echo Petty", "2000s", 3, (0.52, 0.40, 0.44, 0.49, 0.22), 0.13),
]

TITLE_WORDS = [
    "Velvet", "Harbor", "Static", "Neon", "Paper", "Glass", "Winter", "Copper",
    "Signal", "Motel", "Gold", "Orbit", "Island", "Thunder", "Quiet", "Sugar",
    "Mirror", "Radio", "Diesel", "Garden", "Comet", "Lantern", "Fever", "Arrow",
]


def make_title(used: set[str]) -> str:
    while True:
        title = f"{rng.choice(TITLE_WORDS)} {rng.choice(TITLE_WORDS)}"
        if title not in used:
            used.add(title)
            return title


def jitter(center: tuple[float, ...], width: float) -> list[float]:
    vec = [min(0.98, max(0.02, c + rng.uniform(-width, width))) for c in center]
    return [round(v, 3) for v in vec]


def weekly_run(start: date, ranks: list[int]) -> list[tuple[date, int]]:
    return [(start + timedelta(weeks=i), r) for i, r in enumerate(ranks)]


def main() -> None:
    used_titles: set[str] = set()
    chart_rows: list[tuple[date, int, str, str]] = []
    feature_rows: list[tuple[str, str, list[float]]] = []

    def add_song(artist, title, start, ranks, features):
        for week, rank in weekly_run(start, ranks):
            chart_rows.append((week, rank, artist, title))
        if features is not None:
            feature_rows.append((artist, title, features))

    for artist, decade, n_songs, center, width in PLAN:
        specials = 0
        if artist == "Nova Reyes" and decade == "1980s":
            # first row uses the clean spelling (display name source); a later
            # week carries doubled spaces, and the feature row is lowercase --
            # all three must normalize to one key
            chart_rows.append((date(1988, 8, 6), 17, "Nova Reyes", "Glass Signal"))
            chart_rows.append((date(1988, 8, 13), 11, "Nova  Reyes", "Glass Signal"))
            chart_rows.append((date(1988, 8, 20), 13, "Nova Reyes", "Glass Signal"))
            feature_rows.append(("nova reyes", "glass signal", jitter(center, width)))
            used_titles.add("Glass Signal")
            specials = 1
        if artist == "Nova Reyes" and decade == "1990s":
            # three-way avg-rank tie at 15.0 with weeks 3/2/2
            add_song(artist, "Slow Static", date(1992, 4, 4), [15, 15, 15], jitter(center, width))
            add_song(artist, "Borrowed Blue", date(1993, 6, 12), [12, 18], jitter(center, width))
            add_song(artist, "Tide Tables", date(1995, 9, 2), [10, 20], jitter(center, width))
            used_titles.update({"Slow Static", "Borrowed Blue", "Tide Tables"})
            specials = 3
        if artist == "Echo Petty" and decade == "1980s":
            # straddles the decade boundary; earliest week pins it to the 1980s
            add_song(
                artist, "December Answer", date(1989, 12, 16),
                [42, 30, 25, 27, 33], jitter(center, width),
            )
            used_titles.add("December Answer")
            specials = 1
        if artist == "Cass Marlow":
            add_song(artist, "Paper Lanterns", date(2003, 5, 10), [48, 35, 31, 40], None)
            add_song(artist, "Café of Glass", date(2005, 2, 19), [22, 14, 9, 12, 21, 37], jitter(center, width))
            used_titles.update({"Paper Lanterns", "Café of Glass"})
            specials = 2

        for _ in range(n_songs - specials):
            title = make_title(used_titles)
            base = DECADE_START[decade]
            start = base + timedelta(weeks=rng.randrange(0, 500))
            n_weeks = rng.randrange(3, 19)
            peak = rng.randrange(1, 60)
            ranks = sorted(
                rng.sample(range(peak, min(101, peak + 45)), k=min(n_weeks, 41))
            )
            rng.shuffle(ranks)
            vector = [0.5] * 5 if center is None else jitter(center, width)
            add_song(artist, title, start, ranks, vector)

    chart_rows.sort(key=lambda r: (r[0], r[1]))
    FIXTURES.mkdir(parents=True, exist_ok=True)
    with open(FIXTURES / "charts.csv", "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["week", "rank", "artist", "song"])
        for week, rank, artist, title in chart_rows:
            writer.writerow([week.isoformat(), rank, artist, title])

    feature_rows.sort(key=lambda r: (r[0].lower(), r[1].lower()))
    with open(FIXTURES / "features.csv", "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(
            ["artist", "song", "valence", "energy", "danceability", "acousticness", "liveness"]
        )
        for artist, title, vec in feature_rows:
            writer.writerow([artist, title] + [f"{v:.3f}" for v in vec])

    n_songs = len({(a.lower().replace("  ", " "), t.lower()) for _, _, a, t in chart_rows})
    print(f"wrote {len(chart_rows)} chart rows, {n_songs} songs, {len(feature_rows)} feature rows")


if __name__ == "__main__":
    main()
