"""chartalign: era-baseline alignment analytics for weekly music chart data.

Positions each artist-decade pair against its era along two orthogonal
axes: shape similarity (centered cosine between the artist's mean feature
vector and the era centroid) and contrast ratio (artist dispersion over
era dispersion). Results are packaged as an immutable analysis bundle and
served over a read-only HTTP API.
"""

from .bundle import dumps, load_file, loads
from .ingest import build_song_records, normalize_key, parse_charts, parse_features
from .profiles import AnalysisBundle, assemble_bundle
from .service import create_app

__version__ = "0.1.0"

__all__ = [
    "AnalysisBundle",
    "assemble_bundle",
    "build_song_records",
    "create_app",
    "dumps",
    "load_file",
    "loads",
    "normalize_key",
    "parse_charts",
    "parse_features",
    "__version__",
]
