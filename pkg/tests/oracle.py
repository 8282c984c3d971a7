"""Naive reference implementation used only by tests.

Everything here is written with straight loops and plain ``sum``/``math``
calls, shares no code with ``chartalign``, and reads the CSV fixtures on
its own. It exists so the engine can be checked against an independent
second route: same inputs, two implementations, results compared within
1e-9.

The two-sided t tail probability is computed by Simpson quadrature over
the density rather than an incomplete beta function, so the p-value check
does not reuse the engine's numerical path either.
"""

from __future__ import annotations

import csv
import math
from datetime import date

N_FEATURES = 5
FEATURE_COLUMNS = ["valence", "energy", "danceability", "acousticness", "liveness"]


def norm_text(s: str) -> str:
    parts = []
    current = []
    for ch in s.lower():
        if ch.isspace():
            if current:
                parts.append("".join(current))
                current = []
        else:
            current.append(ch)
    if current:
        parts.append("".join(current))
    return " ".join(parts)


def decade_of(d: date) -> str:
    return f"{(d.year // 10) * 10}s"


def read_corpus(charts_path, features_path):
    """Read and join the two CSVs into a list of per-song dicts."""
    features = {}
    with open(features_path, newline="", encoding="utf-8") as fh:
        for row in csv.DictReader(fh):
            key = (norm_text(row["artist"]), norm_text(row["song"]))
            features[key] = [float(row[c]) for c in FEATURE_COLUMNS]

    songs: dict[tuple[str, str], dict] = {}
    order = []
    n_rows = 0
    with open(charts_path, newline="", encoding="utf-8") as fh:
        for row in csv.DictReader(fh):
            n_rows += 1
            key = (norm_text(row["artist"]), norm_text(row["song"]))
            if key not in songs:
                songs[key] = {
                    "key": key,
                    "artist": row["artist"],
                    "title": row["song"],
                    "ranks": [],
                    "dates": [],
                }
                order.append(key)
            songs[key]["ranks"].append(int(row["rank"]))
            songs[key]["dates"].append(date.fromisoformat(row["week"]))

    out = []
    for key in order:
        s = songs[key]
        total = 0
        for r in s["ranks"]:
            total += r
        earliest = s["dates"][0]
        for d in s["dates"]:
            if d < earliest:
                earliest = d
        out.append(
            {
                "key": key,
                "artist": s["artist"],
                "title": s["title"],
                "weeks": len(s["ranks"]),
                "avg_rank": total / len(s["ranks"]),
                "peak_rank": min(s["ranks"]),
                "decade": decade_of(earliest),
                "features": features.get(key),
            }
        )
    return out, n_rows


def contribution(weeks, avg_rank):
    return weeks / avg_rank


def rank_score(songs):
    total = 0.0
    for s in songs:
        total += s["weeks"] / s["avg_rank"]
    return total * math.log(1 + len(songs))


def performance_score(songs):
    total = 0.0
    for s in songs:
        total += s["weeks"] / s["avg_rank"]
    return total * len(songs)


def centroid(vectors):
    n = len(vectors)
    out = []
    for i in range(N_FEATURES):
        total = 0.0
        for v in vectors:
            total += v[i]
        out.append(total / n)
    return out


def spread(vectors):
    """Mean over features of the per-feature population standard deviation."""
    n = len(vectors)
    total = 0.0
    for i in range(N_FEATURES):
        m = 0.0
        for v in vectors:
            m += v[i]
        m /= n
        ss = 0.0
        for v in vectors:
            ss += (v[i] - m) ** 2
        total += math.sqrt(ss / n)
    return total / N_FEATURES


def centered_cosine(a, b):
    ma = sum(a) / len(a)
    mb = sum(b) / len(b)
    ac = [x - ma for x in a]
    bc = [x - mb for x in b]
    dot = 0.0
    na = 0.0
    nb = 0.0
    for x, y in zip(ac, bc):
        dot += x * y
        na += x * x
        nb += y * y
    return dot / (math.sqrt(na) * math.sqrt(nb))


def quadrant(shape, contrast, median_shape):
    if shape >= median_shape:
        return "amplified_conformist" if contrast >= 1.0 else "smoothed_conformist"
    return "polarized_maverick" if contrast >= 1.0 else "muted_maverick"


def median_value(values):
    vs = sorted(values)
    n = len(vs)
    if n % 2 == 1:
        return vs[n // 2]
    return (vs[n // 2 - 1] + vs[n // 2]) / 2


def pearson_r(xs, ys):
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    sxy = 0.0
    sxx = 0.0
    syy = 0.0
    for x, y in zip(xs, ys):
        sxy += (x - mx) * (y - my)
        sxx += (x - mx) ** 2
        syy += (y - my) ** 2
    return sxy / math.sqrt(sxx * syy)


def t_tail_two_sided(t, df):
    """2*P(T_df >= |t|) by Simpson's rule over the Student density."""
    norm = math.exp(math.lgamma((df + 1) / 2.0) - math.lgamma(df / 2.0))
    norm /= math.sqrt(df * math.pi)

    def pdf(x):
        return norm * (1.0 + x * x / df) ** (-(df + 1) / 2.0)

    a, b = 0.0, abs(t)
    if b == 0.0:
        return 1.0
    n = 4000  # even panel count; plenty for 1e-12 on these magnitudes
    h = (b - a) / n
    acc = pdf(a) + pdf(b)
    for i in range(1, n):
        acc += pdf(a + i * h) * (4.0 if i % 2 else 2.0)
    integral = acc * h / 3.0
    return 1.0 - 2.0 * integral


def analyze(songs, k):
    """Full pipeline on joined songs: ranking, baselines, profiles, median,
    quadrants, correlation. Mirrors what the engine is contracted to do,
    independently."""
    by_artist: dict[str, dict] = {}
    artist_order = []
    for s in songs:
        a = s["key"][0]
        if a not in by_artist:
            by_artist[a] = {"display": s["artist"], "songs": []}
            artist_order.append(a)
        by_artist[a]["songs"].append(s)

    ranked = []
    for a in artist_order:
        ranked.append(
            {
                "name": by_artist[a]["display"],
                "name_norm": a,
                "score": rank_score(by_artist[a]["songs"]),
            }
        )
    ranked.sort(key=lambda e: (-e["score"], e["name"]))
    top = ranked[:k]

    decades = sorted({s["decade"] for s in songs})
    baselines = {}
    for d in decades:
        vecs = [s["features"] for s in songs if s["decade"] == d and s["features"] is not None]
        baselines[d] = {
            "centroid": centroid(vecs),
            "sigma": spread(vecs),
            "count": len(vecs),
        }

    profiles = {}
    for entry in top:
        a = entry["name_norm"]
        asongs = by_artist[a]["songs"]
        for d in sorted({s["decade"] for s in asongs}):
            dsongs = [s for s in asongs if s["decade"] == d]
            vecs = [s["features"] for s in dsongs if s["features"] is not None]
            prof = {
                "artist": entry["name"],
                "appearances": sum(s["weeks"] for s in dsongs),
                "distinct_songs": len(dsongs),
                "performance_score": performance_score(dsongs),
                "mean_features": None,
                "sigma_artist": None,
                "shape": None,
                "contrast": None,
                "deviation": None,
                "quadrant": None,
            }
            if vecs:
                mean = centroid(vecs)
                prof["mean_features"] = mean
                prof["sigma_artist"] = spread(vecs)
                prof["deviation"] = [m - c for m, c in zip(mean, baselines[d]["centroid"])]
                if max(mean) > min(mean):
                    prof["shape"] = centered_cosine(mean, baselines[d]["centroid"])
                    prof["contrast"] = prof["sigma_artist"] / baselines[d]["sigma"]
            profiles[(a, d)] = prof

    keys_ok = [key for key, p in sorted(profiles.items()) if p["shape"] is not None]
    shapes = [profiles[key]["shape"] for key in keys_ok]
    contrasts = [profiles[key]["contrast"] for key in keys_ok]
    med = median_value(shapes) if shapes else None
    for key in keys_ok:
        p = profiles[key]
        p["quadrant"] = quadrant(p["shape"], p["contrast"], med)

    corr = None
    if len(shapes) >= 3:
        r = pearson_r(shapes, contrasts)
        t = r * math.sqrt((len(shapes) - 2) / (1.0 - r * r))
        corr = {"r": r, "p": t_tail_two_sided(t, len(shapes) - 2), "n": len(shapes)}

    return {
        "ranked": top,
        "baselines": baselines,
        "profiles": profiles,
        "median_shape": med,
        "correlation": corr,
    }
