from __future__ import annotations

from datetime import date

import pytest
from hypothesis import given, strategies as st

from chartalign.ingest import (
    BadDate,
    BadRank,
    ChartEntry,
    DuplicateEntry,
    DuplicateKey,
    EmptyEntries,
    FeatureOutOfRange,
    FeatureVector,
    MalformedHeader,
    SongKey,
    assign_decade,
    build_song_records,
    dump_charts,
    normalize_key,
    parse_charts,
    parse_features,
)

CHARTS_HEADER = "week,rank,artist,song\n"
FEATURES_HEADER = "artist,song,valence,energy,danceability,acousticness,liveness\n"


def entry(week: str, rank: int, artist="A", song="S") -> ChartEntry:
    return ChartEntry(week=date.fromisoformat(week), rank=rank, artist=artist, song=song)


class TestParseCharts:
    def test_single_row(self):
        text = CHARTS_HEADER + "1992-02-08,40,Michael Jackson,Remember The Time\n"
        entries = parse_charts(text.encode())
        assert entries == [
            ChartEntry(
                week=date(1992, 2, 8),
                rank=40,
                artist="Michael Jackson",
                song="Remember The Time",
            )
        ]

    def test_rank_zero_rejected(self):
        text = CHARTS_HEADER + "1992-02-08,0,A,S\n"
        with pytest.raises(BadRank, match="line 2"):
            parse_charts(text.encode())

    def test_rank_non_integer_rejected(self):
        text = CHARTS_HEADER + "1992-02-08,forty,A,S\n"
        with pytest.raises(BadRank, match="line 2"):
            parse_charts(text.encode())

    def test_duplicate_names_line(self):
        text = CHARTS_HEADER + (
            "1992-02-08,40,Abba,SOS\n"
            "1992-02-15,41,Abba,SOS\n"
            "1992-02-08,42,ABBA,sos\n"  # same key+week as line 2 after normalization
        )
        with pytest.raises(DuplicateEntry, match="line 4"):
            parse_charts(text.encode())

    def test_header_mismatch(self):
        with pytest.raises(MalformedHeader):
            parse_charts(b"week,rank,artist\n")
        with pytest.raises(MalformedHeader):
            parse_charts(b"Week,Rank,Artist,Song\n1992-02-08,40,A,S\n")

    def test_bad_date(self):
        with pytest.raises(BadDate, match="line 2"):
            parse_charts((CHARTS_HEADER + "02/08/1992,40,A,S\n").encode())

    def test_out_of_window(self):
        with pytest.raises(BadDate, match="window"):
            parse_charts((CHARTS_HEADER + "1955-02-08,40,A,S\n").encode())
        with pytest.raises(BadDate, match="window"):
            parse_charts((CHARTS_HEADER + "2020-01-04,40,A,S\n").encode())

    def test_custom_window(self):
        text = CHARTS_HEADER + "1955-02-08,40,A,S\n"
        entries = parse_charts(text.encode(), window=(date(1950, 1, 1), date(2019, 12, 31)))
        assert entries[0].week == date(1955, 2, 8)

    def test_round_trip(self, charts_path):
        entries = parse_charts(charts_path.read_bytes())
        assert parse_charts(dump_charts(entries)) == entries


class TestParseFeatures:
    def test_single_row(self):
        text = FEATURES_HEADER + "michael jackson,remember the time,0.7,0.8,0.9,0.05,0.1\n"
        features = parse_features(text.encode())
        key = SongKey("michael jackson", "remember the time")
        assert features == {key: FeatureVector(0.7, 0.8, 0.9, 0.05, 0.1)}

    def test_out_of_range(self):
        text = FEATURES_HEADER + "a,s,0.7,1.5,0.9,0.05,0.1\n"
        with pytest.raises(FeatureOutOfRange, match="energy"):
            parse_features(text.encode())

    def test_non_numeric(self):
        text = FEATURES_HEADER + "a,s,0.7,high,0.9,0.05,0.1\n"
        with pytest.raises(FeatureOutOfRange, match="line 2"):
            parse_features(text.encode())

    def test_case_collision_is_duplicate(self):
        text = FEATURES_HEADER + (
            "Michael Jackson,Thriller,0.7,0.8,0.9,0.05,0.1\n"
            "Michael Jackson,THRILLER,0.5,0.5,0.5,0.5,0.5\n"
        )
        with pytest.raises(DuplicateKey, match="line 3"):
            parse_features(text.encode())

    def test_header_mismatch(self):
        with pytest.raises(MalformedHeader):
            parse_features(b"artist,song,valence,energy,danceability,acousticness\n")


class TestNormalizeKey:
    def test_trim_collapse_lower(self):
        assert normalize_key("Michael  Jackson ", "Remember The Time") == SongKey(
            "michael jackson", "remember the time"
        )

    def test_identity_on_normal(self):
        assert normalize_key("abba", "sos") == SongKey("abba", "sos")

    def test_tabs_and_runs(self):
        assert normalize_key("A\tB", "x  y") == SongKey("a b", "x y")

    @given(st.text(max_size=40), st.text(max_size=40))
    def test_idempotent(self, artist, title):
        once = normalize_key(artist, title)
        assert normalize_key(once.artist_norm, once.title_norm) == once


class TestAssignDecade:
    def test_single_entry(self):
        assert assign_decade([entry("1992-02-08", 40)]) == "1990s"

    def test_earliest_week_wins(self):
        entries = [entry("1990-01-06", 10), entry("1989-12-30", 20)]
        assert assign_decade(entries) == "1980s"

    def test_minimum_of_three(self):
        entries = [entry("1971-05-01", 1), entry("1969-11-22", 2), entry("1970-01-03", 3)]
        assert assign_decade(entries) == "1960s"

    def test_empty(self):
        with pytest.raises(EmptyEntries):
            assign_decade([])

    @given(st.permutations([entry("1971-05-01", 1), entry("1969-11-22", 2), entry("1970-01-03", 3), entry("1983-07-16", 4)]))
    def test_permutation_invariant(self, entries):
        assert assign_decade(entries) == "1960s"


class TestBuildSongRecords:
    def test_aggregates(self):
        entries = [
            entry("1992-02-08", 3),
            entry("1992-02-15", 10),
            entry("1992-02-22", 25),
            entry("1992-02-29", 38),
        ]
        records, warnings = build_song_records(entries, {})
        (record,) = records
        assert record.weeks == 4
        assert record.peak_rank == 3
        assert record.avg_rank == 19.0
        assert len(warnings) == 1  # no features supplied

    def test_single_entry(self):
        records, _ = build_song_records([entry("1992-02-08", 5)], {})
        assert (records[0].weeks, records[0].peak_rank, records[0].avg_rank) == (1, 5, 5.0)

    def test_missing_features_warn_but_keep(self):
        key = normalize_key("A", "S")
        vec = FeatureVector(0.1, 0.2, 0.3, 0.4, 0.5)
        entries = [entry("1992-02-08", 5), entry("1992-02-08", 6, song="Other")]
        records, warnings = build_song_records(entries, {key: vec})
        assert len(records) == 2
        assert records[0].features == vec
        assert records[1].features is None
        assert [w.key.title_norm for w in warnings] == ["other"]

    def test_display_names_from_first_row(self):
        entries = [
            ChartEntry(date(1992, 2, 8), 5, "Nova Reyes", "Glass Signal"),
            ChartEntry(date(1992, 2, 15), 6, "Nova  Reyes", "GLASS SIGNAL"),
        ]
        records, _ = build_song_records(entries, {})
        (record,) = records
        assert record.display_artist == "Nova Reyes"
        assert record.display_title == "Glass Signal"
        assert record.weeks == 2

    def test_conservation_on_fixture(self, corpus):
        entries, records, _ = corpus
        assert sum(r.weeks for r in records) == len(entries)

    def test_invariants_on_fixture(self, corpus):
        _, records, _ = corpus
        for r in records:
            assert r.weeks >= 1
            assert r.peak_rank <= r.avg_rank <= 100
            assert r.weeks == len(r.entries)
            assert r.peak_rank == min(e.rank for e in r.entries)
            assert r.avg_rank == pytest.approx(
                sum(e.rank for e in r.entries) / r.weeks, abs=1e-12
            )


@given(
    st.lists(
        st.tuples(
            st.dates(date(1960, 1, 1), date(2019, 12, 31)),
            st.integers(1, 100),
            st.sampled_from(["Ada", "Bea  Lin", "CHO"]),
            st.sampled_from(["One", "Two Words", "tré"]),
        ),
        max_size=60,
    )
)
def test_random_roundtrip_and_conservation(rows):
    seen = set()
    entries = []
    for week, rank, artist, song in rows:
        key = (normalize_key(artist, song), week)
        if key in seen:
            continue
        seen.add(key)
        entries.append(ChartEntry(week=week, rank=rank, artist=artist, song=song))
    reparsed = parse_charts(dump_charts(entries))
    assert reparsed == entries
    records, _ = build_song_records(entries, {})
    assert sum(r.weeks for r in records) == len(entries)
