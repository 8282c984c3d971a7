from __future__ import annotations

import time

import pytest
from fastapi.testclient import TestClient

from chartalign.metrics import deviation
from chartalign.profiles import assemble_bundle
from chartalign.service import create_app

from test_profiles import make_corpus


@pytest.fixture(scope="module")
def client(fixture_bundle):
    return TestClient(create_app(fixture_bundle))


class TestSummary:
    def test_fields(self, client, fixture_bundle):
        body = client.get("/api/summary").json()
        assert body["artist_count"] == 5
        assert body["profile_count"] == 10
        assert body["median_shape"] == fixture_bundle.median_shape
        assert body["correlation"]["n"] == fixture_bundle.correlation.n
        assert body["correlation"]["r"] == fixture_bundle.correlation.r
        assert body["window"] == {"start": "1960-01-01", "end": "2019-12-31"}

    def test_correlation_marked_skipped(self):
        # two artists whose means are constant vectors: no classifiable profiles
        records, _ = make_corpus(
            [("Ada", "One", "1991-01-05", [5]), ("Bee", "Two", "1991-02-02", [6])],
            {("Ada", "One"): (0.5,) * 5, ("Bee", "Two"): (0.6,) * 5},
        )
        bundle = assemble_bundle(records, 2)
        local = TestClient(create_app(bundle))
        body = local.get("/api/summary").json()
        assert body["correlation"] is None
        assert body["median_shape"] is None


class TestArtists:
    def test_order_preserved(self, client, fixture_bundle):
        body = client.get("/api/artists").json()
        assert [a["name"] for a in body] == [a.name for a in fixture_bundle.artists]
        assert [a["score"] for a in body] == [a.score for a in fixture_bundle.artists]


class TestTrajectory:
    def test_points_ordered(self, client):
        body = client.get("/api/artists/nova%20reyes/trajectory").json()
        assert [p["decade"] for p in body["points"]] == ["1980s", "1990s", "2000s"]
        assert body["artist"] == "Nova Reyes"

    def test_unknown_artist_404(self, client):
        resp = client.get("/api/artists/nobody/trajectory")
        assert resp.status_code == 404
        assert resp.json() == {
            "status": 404,
            "code": "not_found",
            "message": resp.json()["message"],
        }

    def test_degenerate_decade_in_bubbles_not_points(self, client):
        body = client.get("/api/artists/dru%20holloway/trajectory").json()
        assert [p["decade"] for p in body["points"]] == ["2000s"]
        bubbles = {d["decade"]: d for d in body["decades"]}
        assert set(bubbles) == {"1990s", "2000s"}
        assert bubbles["1990s"]["degenerate"] is True
        assert bubbles["1990s"]["degenerate_reason"] == "constant_mean_features"
        assert bubbles["2000s"]["degenerate"] is False

    def test_display_case_url_normalized(self, client):
        assert client.get("/api/artists/Nova%20Reyes/trajectory").status_code == 200


class TestProfileDetail:
    def test_deviation_is_mean_minus_centroid(self, client, fixture_bundle):
        body = client.get("/api/artists/cass%20marlow/decades/2000s").json()
        profile = next(
            p
            for p in fixture_bundle.profiles
            if p.artist_norm == "cass marlow" and p.decade == "2000s"
        )
        centroid = next(
            b for b in fixture_bundle.baselines if b.decade == "2000s"
        ).centroid
        assert body["deviation"] == list(deviation(profile.mean_features, centroid))
        assert body["alignment"]["quadrant"] == "amplified_conformist"

    def test_zero_deviation_when_artist_is_era(self):
        records, _ = make_corpus(
            [("Ada", "One", "1991-01-05", [5]), ("Ada", "Two", "1992-01-04", [6])],
            {("Ada", "One"): (0.1, 0.9, 0.5, 0.3, 0.2), ("Ada", "Two"): (0.2, 0.8, 0.6, 0.4, 0.1)},
        )
        bundle = assemble_bundle(records, 1)
        local = TestClient(create_app(bundle))
        body = local.get("/api/artists/ada/decades/1990s").json()
        assert body["deviation"] == [0.0] * 5
        assert body["alignment"]["contrast_ratio"] == 1.0

    def test_song_table_order_with_ties(self, client):
        body = client.get("/api/artists/nova%20reyes/decades/1990s").json()
        rows = [r["title"] for r in body["songs"]]
        tied = [t for t in rows if t in ("Slow Static", "Borrowed Blue", "Tide Tables")]
        assert tied == ["Slow Static", "Borrowed Blue", "Tide Tables"]
        avgs = [r["avg_rank"] for r in body["songs"]]
        assert avgs == sorted(avgs)

    def test_missing_feature_song_flagged(self, client):
        body = client.get("/api/artists/cass%20marlow/decades/2000s").json()
        row = next(r for r in body["songs"] if r["title"] == "Paper Lanterns")
        assert row["has_features"] is False

    def test_degenerate_profile_payload(self, client):
        body = client.get("/api/artists/dru%20holloway/decades/1990s").json()
        assert body["alignment"] is None
        assert body["degenerate_reason"] == "constant_mean_features"

    def test_unknown_profile_404(self, client):
        assert client.get("/api/artists/nova%20reyes/decades/1960s").status_code == 404

    def test_bad_decade_label_400(self, client):
        resp = client.get("/api/artists/nova%20reyes/decades/nineties")
        assert resp.status_code == 400
        assert resp.json()["code"] == "bad_request"


class TestSongSignature:
    def test_radar_and_deviation(self, client, fixture_bundle):
        resp = client.get(
            "/api/artists/cass%20marlow/decades/2000s/songs/caf%C3%A9%20of%20glass"
        )
        assert resp.status_code == 200
        body = resp.json()
        assert body["title"] == "Café of Glass"
        radar = body["radar"]
        assert radar["feature_order"] == [
            "valence",
            "energy",
            "danceability",
            "acousticness",
            "liveness",
        ]
        assert len(radar["era"]) == len(radar["artist"]) == len(radar["song"]) == 5
        expected = [s - c for s, c in zip(radar["song"], radar["era"])]
        assert body["deviation"] == expected

    def test_zero_deviation_song(self):
        # dyadic feature values whose per-feature mean is exact in floats,
        # with the middle song sitting exactly on the centroid
        records, _ = make_corpus(
            [("Ada", "Mid", "1991-01-05", [5]), ("Ada", "Low", "1992-01-04", [6]), ("Ada", "High", "1993-01-02", [7])],
            {
                ("Ada", "Mid"): (0.5, 0.625, 0.375, 0.25, 0.125),
                ("Ada", "Low"): (0.25, 0.5, 0.25, 0.125, 0.0),
                ("Ada", "High"): (0.75, 0.75, 0.5, 0.375, 0.25),
            },
        )
        bundle = assemble_bundle(records, 1)
        local = TestClient(create_app(bundle))
        body = local.get("/api/artists/ada/decades/1990s/songs/mid").json()
        assert body["deviation"] == [0.0] * 5

    def test_featureless_song_degenerate(self, client):
        resp = client.get(
            "/api/artists/cass%20marlow/decades/2000s/songs/paper%20lanterns"
        )
        assert resp.status_code == 422
        body = resp.json()
        assert body["code"] == "degenerate_profile"
        assert set(body) == {"status", "code", "message"}

    def test_unknown_song_404(self, client):
        resp = client.get("/api/artists/cass%20marlow/decades/2000s/songs/nope")
        assert resp.status_code == 404


class TestServiceContract:
    def test_idempotent_reads(self, client):
        paths = [
            "/api/summary",
            "/api/artists",
            "/api/artists/nova%20reyes/trajectory",
            "/api/artists/nova%20reyes/decades/1990s",
        ]
        for path in paths:
            first = client.get(path)
            second = client.get(path)
            assert first.content == second.content
            assert first.status_code == second.status_code == 200

    def test_latency_under_50ms(self, client):
        paths = [
            "/api/summary",
            "/api/artists",
            "/api/artists/nova%20reyes/trajectory",
            "/api/artists/nova%20reyes/decades/1990s",
            "/api/artists/cass%20marlow/decades/2000s/songs/caf%C3%A9%20of%20glass",
        ]
        for path in paths:
            samples = []
            for _ in range(5):
                start = time.perf_counter()
                client.get(path)
                samples.append(time.perf_counter() - start)
            assert min(samples) < 0.05, path

    def test_static_dir_served(self, fixture_bundle, tmp_path):
        (tmp_path / "index.html").write_text("<!doctype html><title>ui</title>")
        local = TestClient(create_app(fixture_bundle, static_dir=tmp_path))
        resp = local.get("/")
        assert resp.status_code == 200
        assert "ui" in resp.text
        # API still reachable alongside the static mount
        assert local.get("/api/summary").status_code == 200
