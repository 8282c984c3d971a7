from __future__ import annotations

from pathlib import Path

import pytest

from chartalign.ingest import build_song_records, parse_charts, parse_features
from chartalign.profiles import EPOCH_TIMESTAMP, assemble_bundle

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def charts_path() -> Path:
    return FIXTURES / "charts.csv"


@pytest.fixture(scope="session")
def features_path() -> Path:
    return FIXTURES / "features.csv"


@pytest.fixture(scope="session")
def golden_bundle_path() -> Path:
    return FIXTURES / "golden_bundle.json"


@pytest.fixture(scope="session")
def corpus(charts_path, features_path):
    """(entries, records, warnings) parsed once for the whole session."""
    entries = parse_charts(charts_path.read_bytes())
    features = parse_features(features_path.read_bytes())
    records, warnings = build_song_records(entries, features)
    return entries, records, warnings


@pytest.fixture(scope="session")
def fixture_bundle(corpus):
    _, records, warnings = corpus
    return assemble_bundle(
        records, 5, ingest_warnings=warnings, created_at=EPOCH_TIMESTAMP
    )
